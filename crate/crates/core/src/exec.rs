//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) the mapping functions fan out
//! over rayon; without it they degrade to plain loops. Work items must not
//! communicate: each item derives its own random stream, and results are
//! collected in index order, so the output is identical either way. Reductions
//! over floating-point values go through [`neumaier_sum`] in a fixed order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..n`, collecting results in index order.
#[cfg(feature = "parallel")]
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Map `f` over `0..n`, collecting results in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Sequential twin of [`map_range`], always single-threaded.
///
/// Exists so benchmarks can compare the two paths within one build.
pub fn map_range_seq<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

/// Map `f` over a slice, collecting results in input order.
#[cfg(feature = "parallel")]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Map `f` over a slice, collecting results in input order.
#[cfg(not(feature = "parallel"))]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Fill `out[i] = f(i)` in place, in parallel when enabled.
#[cfg(feature = "parallel")]
pub fn fill_indexed<U, F>(out: &mut [U], f: F)
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    out.par_iter_mut().enumerate().for_each(|(i, slot)| *slot = f(i));
}

/// Fill `out[i] = f(i)` in place, in parallel when enabled.
#[cfg(not(feature = "parallel"))]
pub fn fill_indexed<U, F>(out: &mut [U], f: F)
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = f(i);
    }
}

/// Compensated (Neumaier) summation in slice order.
pub fn neumaier_sum(values: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Compensated sum of `f(i)` for `i` in `0..n`, accumulated in index order.
pub fn neumaier_sum_fn<F: FnMut(usize) -> f64>(n: usize, mut f: F) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for i in 0..n {
        let v = f(i);
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_range_matches_seq() {
        let f = |i: usize| (i as f64).sqrt();
        assert_eq!(map_range(100, f), map_range_seq(100, f));
    }

    #[test]
    fn neumaier_beats_naive_on_cancellation() {
        // 1 + 2^-60 repeated; naive summation loses the small terms entirely.
        let mut values = vec![1.0];
        values.extend(std::iter::repeat(f64::powi(2.0, -60)).take(1 << 20));
        let exact = 1.0 + (1 << 20) as f64 * f64::powi(2.0, -60);
        assert_eq!(neumaier_sum(&values), exact);
    }
}
