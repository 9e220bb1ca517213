//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) `Exec::Parallel` fans work out over
//! rayon's global pool. Without it, `Exec::Parallel` runs sequentially, so
//! callers never need their own `cfg` branches. Results are always returned
//! in input order.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when this mode will actually use more than one thread.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<U, F>(self, range: Range<usize>, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(usize) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    /// Maximum of `f` over a `u64` range, split into contiguous chunks.
    pub fn max_over<F>(self, range: Range<u64>, f: F) -> Option<u64>
    where
        F: Fn(u64) -> u64 + Sync + Send,
    {
        if range.is_empty() {
            return None;
        }
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            const CHUNK: u64 = 1 << 14;
            let start = range.start;
            let chunks = (range.end - start).div_ceil(CHUNK);
            return (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let lo = start + c * CHUNK;
                    let hi = (lo + CHUNK).min(range.end);
                    (lo..hi).map(&f).max().unwrap_or(0)
                })
                .max();
        }
        range.map(f).max()
    }

    /// True if `pred` holds for some item. Short-circuits in both modes.
    pub fn any<T, F>(self, items: &[T], pred: F) -> bool
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            return items.par_iter().any(pred);
        }
        items.iter().any(pred)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            let sq = exec.map(&items, |x| x * x);
            assert_eq!(sq[999], 999 * 999);
            assert_eq!(exec.max_over(0..100_000, |x| x % 77_777), Some(77_776));
            assert!(exec.any(&items, |&x| x == 500));
            assert_eq!(exec.map_range(0..5, |i| i + 1), vec![1, 2, 3, 4, 5]);
        }
        assert_eq!(Exec::Sequential.max_over(5..5, |x| x), None);
    }
}
