//! Batch evaluation over independent work items.
//!
//! Every sweep and randomized suite in this crate maps a pure function over
//! independent inputs, so the work is embarrassingly parallel. With the
//! `parallel` feature (on by default) [`map`] fans out over the rayon
//! thread pool; without it the build falls back to the sequential path.
//! [`map_seq`] stays available in both configurations so benchmarks can
//! compare the two directly. Both preserve input order.

/// Sequential map, available regardless of features.
pub fn map_seq<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Order-preserving map over independent items, parallel when the
/// `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Order-preserving map over independent items (sequential fallback).
#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    map_seq(items, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let items: Vec<u64> = (0..1000).collect();
        let doubled = map(&items, |x| x * 2);
        assert_eq!(doubled, map_seq(&items, |x| x * 2));
        assert_eq!(doubled[500], 1000);
    }
}
