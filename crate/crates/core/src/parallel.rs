//! Deterministic fork-join map-reduce over an indexed work list.
//!
//! Work items are claimed dynamically by worker threads (so load balances
//! itself), but results are folded strictly in index order after all
//! workers finish. The folded result is therefore bitwise identical for
//! every thread count — including for floating-point reductions, where
//! associativity would otherwise leak scheduling noise into the output.

use std::sync::atomic::{AtomicU64, Ordering};

/// Resolves the worker count: an explicit request wins, then the
/// `ADDSUM_THREADS` environment variable, then the machine's parallelism.
pub fn num_threads(requested: Option<usize>) -> usize {
    if let Some(n) = requested {
        return n.max(1);
    }
    if let Ok(s) = std::env::var("ADDSUM_THREADS") {
        if let Ok(n) = s.trim().parse::<usize>() {
            return n.max(1);
        }
    }
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Maps `0..n_items` across `threads` workers and folds the results in
/// strict index order.
///
/// `map` runs concurrently and must be `Sync`; `fold` runs on the calling
/// thread only, after every worker has joined. One mapped result per item
/// is buffered, so items should be coarse (segments, not individual
/// integers).
pub fn map_reduce_in_order<R, A>(
    n_items: u64,
    threads: usize,
    map: impl Fn(u64) -> R + Sync,
    init: A,
    mut fold: impl FnMut(A, R) -> A,
) -> A
where
    R: Send,
{
    if n_items == 0 {
        return init;
    }
    let threads = threads.max(1).min(n_items as usize);
    if threads == 1 {
        let mut acc = init;
        for i in 0..n_items {
            acc = fold(acc, map(i));
        }
        return acc;
    }
    let next = AtomicU64::new(0);
    let mut buckets: Vec<Vec<(u64, R)>> = Vec::with_capacity(threads);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|_| {
                s.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= n_items {
                            break;
                        }
                        local.push((i, map(i)));
                    }
                    local
                })
            })
            .collect();
        for h in handles {
            buckets.push(h.join().expect("worker thread panicked"));
        }
    });
    let mut results: Vec<(u64, R)> = buckets.into_iter().flatten().collect();
    results.sort_by_key(|&(i, _)| i);
    results.into_iter().fold(init, |acc, (_, r)| fold(acc, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::Real;
    use crate::Hp;
    use num_bigint::BigInt;

    #[test]
    fn integer_reduction_matches_closed_form() {
        let n = 10_000u64;
        let sum = map_reduce_in_order(
            n,
            4,
            |i| BigInt::from((i + 1) * (i + 1)),
            BigInt::from(0u8),
            |a, r| a + r,
        );
        let nn = BigInt::from(n);
        assert_eq!(sum, &nn * (&nn + 1u8) * (2u8 * &nn + 1u8) / 6u8);
    }

    #[test]
    fn float_reduction_is_bitwise_stable_across_thread_counts() {
        let run = |threads| {
            map_reduce_in_order(
                500,
                threads,
                |i| Hp::ONE / Hp::from(i + 1),
                Hp::ZERO,
                |a, r| a + r,
            )
        };
        let one = run(1);
        for t in [2, 3, 7, 16] {
            assert_eq!(run(t), one, "thread count {t} changed the bits");
        }
    }

    #[test]
    fn fold_sees_items_in_index_order() {
        let order = map_reduce_in_order(
            100,
            8,
            |i| i,
            Vec::new(),
            |mut acc: Vec<u64>, i| {
                acc.push(i);
                acc
            },
        );
        let expected: Vec<u64> = (0..100).collect();
        assert_eq!(order, expected);
    }

    #[test]
    fn zero_items_returns_init() {
        let v = map_reduce_in_order(0, 4, |_| 1u64, 42u64, |a, r| a + r);
        assert_eq!(v, 42);
    }

    #[test]
    fn thread_resolution_prefers_explicit() {
        assert_eq!(num_threads(Some(3)), 3);
        assert_eq!(num_threads(Some(0)), 1);
        assert!(num_threads(None) >= 1);
    }

    #[test]
    fn hp_powi_interops_with_reduction() {
        // Small smoke test combining Real and the reducer: sum of 2^-i.
        let s = map_reduce_in_order(
            60,
            5,
            |i| Real::powi(Hp::from_f64(0.5), i as i64),
            Hp::ZERO,
            |a, r| a + r,
        );
        assert!((s.to_f64() - 2.0).abs() < 1e-15);
    }
}
