//! Execution policy for the data-parallel inner loops.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] fans rows
//! out over the rayon pool; without it every policy runs sequentially. Both
//! paths produce bit-identical output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        Exec::auto()
    }
}

impl Exec {
    /// Parallel when compiled with rayon, sequential otherwise.
    pub fn auto() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }

    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Visit `buf` in chunks of `row_len` bytes, passing the row index.
pub(crate) fn for_each_row<F>(exec: Exec, buf: &mut [u8], row_len: usize, f: F)
where
    F: Fn(usize, &mut [u8]) + Send + Sync,
{
    if row_len == 0 {
        return;
    }
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        buf.par_chunks_mut(row_len).enumerate().for_each(|(y, row)| f(y, row));
        return;
    }
    let _ = exec;
    buf.chunks_mut(row_len).enumerate().for_each(|(y, row)| f(y, row));
}

/// Order-preserving map over a slice.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_policies_visit_every_row_once() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let mut buf = vec![0u8; 7 * 13];
            for_each_row(exec, &mut buf, 7, |y, row| row.iter_mut().for_each(|b| *b = y as u8));
            for (y, row) in buf.chunks(7).enumerate() {
                assert!(row.iter().all(|&b| b == y as u8));
            }
        }
    }

    #[test]
    fn map_preserves_order() {
        let v: Vec<u32> = (0..1000).collect();
        assert_eq!(map(Exec::Parallel, &v, |x| x * 2), map(Exec::Sequential, &v, |x| x * 2));
    }
}
