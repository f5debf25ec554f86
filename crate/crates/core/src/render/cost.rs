use std::ops::{Add, AddAssign};

/// Converts work units (pixels written) into virtual milliseconds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CostModel {
    /// Pixels per virtual millisecond. `f64::INFINITY` makes work free.
    pub throughput: f64,
    /// Fixed virtual cost of every operation.
    pub overhead_ms: f64,
    /// Round trip to the processing service, per remote effect.
    pub remote_latency_ms: f64,
}

impl Default for CostModel {
    fn default() -> Self {
        Self { throughput: 1000.0, overhead_ms: 0.0, remote_latency_ms: 50.0 }
    }
}

impl CostModel {
    pub fn with_throughput(throughput: f64) -> Self {
        Self { throughput, ..Self::default() }
    }

    /// Report for one operation.
    pub fn report(&self, work_units: u64, frames: u32, remote_calls: u32) -> CostReport {
        let compute = if self.throughput.is_infinite() { 0.0 } else { work_units as f64 / self.throughput };
        CostReport {
            work_units,
            virtual_ms: compute + self.overhead_ms + remote_calls as f64 * self.remote_latency_ms,
            frames,
            remote_calls,
        }
    }
}

/// Work and virtual time charged to one render or operation.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CostReport {
    pub work_units: u64,
    pub virtual_ms: f64,
    pub frames: u32,
    pub remote_calls: u32,
}

impl Add for CostReport {
    type Output = CostReport;

    fn add(self, rhs: CostReport) -> CostReport {
        CostReport {
            work_units: self.work_units + rhs.work_units,
            virtual_ms: self.virtual_ms + rhs.virtual_ms,
            frames: self.frames + rhs.frames,
            remote_calls: self.remote_calls + rhs.remote_calls,
        }
    }
}

impl AddAssign for CostReport {
    fn add_assign(&mut self, rhs: CostReport) {
        *self = *self + rhs;
    }
}
