/// Timer with a coarse update interval: `floor(t / resolution) · resolution`.
pub fn quantize_clock(t: f64, resolution: f64) -> f64 {
    assert!(resolution > 0.0, "clock resolution must be positive");
    (t / resolution).floor() * resolution
}

/// Virtual milliseconds. Never reads the wall clock.
#[derive(Clone, Debug, Default)]
pub struct VirtualClock {
    now: f64,
    resolution: Option<f64>,
}

impl VirtualClock {
    pub fn new(resolution: Option<f64>) -> Self {
        if let Some(r) = resolution {
            assert!(r > 0.0, "clock resolution must be positive");
        }
        Self { now: 0.0, resolution }
    }

    pub fn now(&self) -> f64 {
        self.now
    }

    pub fn advance(&mut self, ms: f64) {
        self.now += ms;
    }

    /// Idle until the timer's next visible tick, so the next measurement
    /// starts exactly on an update of the coarse timer.
    pub fn align(&mut self) {
        if let Some(r) = self.resolution {
            let q = quantize_clock(self.now, r);
            if q < self.now {
                self.now = q + r;
            }
        }
    }

    /// What a script reading the timer before and after would report.
    pub fn measured(&self, start: f64, end: f64) -> f64 {
        match self.resolution {
            Some(r) => quantize_clock(end, r) - quantize_clock(start, r),
            None => end - start,
        }
    }

    /// Align, spend `duration`, and return the reported duration.
    pub fn measure(&mut self, duration: f64) -> f64 {
        self.align();
        let start = self.now;
        self.now += duration;
        match self.resolution {
            Some(_) => self.measured(start, self.now),
            None => duration,
        }
    }
}
