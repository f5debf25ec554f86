//! The scripted drag: 2681 ms, 503 px straight down.

use crate::geometry::Point;

pub const TRACE_DURATION_MS: f64 = 2681.0;
pub const TRACE_DISPLACEMENT_PX: f64 = 503.0;
pub const TRACE_SAMPLES: usize = 269;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceSample {
    pub t: f64,
    /// Offset from the press point in screen pixels.
    pub offset: Point,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MouseTrace {
    samples: Vec<TraceSample>,
}

impl MouseTrace {
    pub fn samples(&self) -> &[TraceSample] {
        &self.samples
    }

    pub fn duration(&self) -> f64 {
        self.samples.last().map_or(0.0, |s| s.t)
    }

    /// Latest sample at or before `t`.
    pub fn at(&self, t: f64) -> TraceSample {
        let idx = self.samples.partition_point(|s| s.t <= t);
        self.samples[idx.saturating_sub(1)]
    }
}

/// Uniformly sampled trace, `t_k = k·2681/268`, `y_k = k·503/268`.
pub fn make_mouse_trace() -> MouseTrace {
    let last = (TRACE_SAMPLES - 1) as f64;
    let samples = (0..TRACE_SAMPLES)
        .map(|k| {
            let k = k as f64;
            TraceSample {
                t: k * TRACE_DURATION_MS / last,
                offset: Point::new(0.0, k * TRACE_DISPLACEMENT_PX / last),
            }
        })
        .collect();
    MouseTrace { samples }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_and_midpoint() {
        let t = make_mouse_trace();
        let s = t.samples();
        assert_eq!(s.len(), 269);
        assert_eq!(s[0], TraceSample { t: 0.0, offset: Point::new(0.0, 0.0) });
        assert_eq!(s[268], TraceSample { t: 2681.0, offset: Point::new(0.0, 503.0) });
        assert_eq!(s[134], TraceSample { t: 1340.5, offset: Point::new(0.0, 251.5) });
    }

    #[test]
    fn strictly_increasing() {
        let t = make_mouse_trace();
        assert!(t.samples().windows(2).all(|w| w[0].t < w[1].t && w[0].offset.y < w[1].offset.y));
    }

    #[test]
    fn lookup_by_time() {
        let t = make_mouse_trace();
        assert_eq!(t.at(0.0).t, 0.0);
        assert_eq!(t.at(5.0).t, 0.0);
        assert_eq!(t.at(10.004).t, 2681.0 / 268.0);
        assert_eq!(t.at(1e9).t, 2681.0);
    }
}
