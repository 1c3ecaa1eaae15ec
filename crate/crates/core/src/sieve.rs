//! Prime generation: a simple odd-only sieve for small limits and a
//! segmented sieve for large ones.
//!
//! The segmented form works in fixed windows of 2^20 odd candidates
//! (a span of 2^21 integers, 1 MiB of flags), so peak memory stays at
//! O(segment + pi(sqrt(x))) no matter how large `x` gets. Segments are
//! addressed by index, which is what lets callers sieve disjoint windows on
//! different threads and still combine results in a fixed order.

use num_integer::Roots;

/// Number of integers covered by one sieve segment (2^20 odd candidates).
pub const SEGMENT_SPAN: u64 = 1 << 21;

/// An ascending list of primes together with the interval it covers.
///
/// Invariant: `primes` holds exactly the primes `p` with `lo <= p <= hi`,
/// in increasing order. `lo >= 2`; the list may be empty if `hi < lo`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeRange {
    pub lo: u64,
    pub hi: u64,
    pub primes: Vec<u64>,
}

/// All primes `<= limit` by a classic odd-only sieve of Eratosthenes.
///
/// Memory is O(limit), so this is meant for small limits — base primes for
/// the segmented sieve (`limit = sqrt(x)`) and direct use below ~10^7.
pub fn simple_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut primes = vec![2];
    if limit < 3 {
        return primes;
    }
    // flags[i] represents the odd number 2i + 3.
    let n_odd = ((limit - 3) / 2 + 1) as usize;
    let mut composite = vec![false; n_odd];
    let mut i = 0usize;
    while {
        let p = 2 * (i as u64) + 3;
        p * p <= limit
    } {
        if !composite[i] {
            let p = 2 * (i as u64) + 3;
            // First multiple worth crossing off is p^2 (odd since p is odd).
            let mut m = ((p * p) - 3) / 2;
            while (m as usize) < n_odd {
                composite[m as usize] = true;
                m += p;
            }
        }
        i += 1;
    }
    for (j, &c) in composite.iter().enumerate() {
        if !c {
            primes.push(2 * (j as u64) + 3);
        }
    }
    primes
}

/// Segmented access to the primes in `[2, x]`.
///
/// Construction sieves the base primes up to `sqrt(x)` once; each call to
/// [`primes_in_segment`](Segmenter::primes_in_segment) then works
/// independently, so segments can be processed concurrently through a
/// shared `&Segmenter`.
#[derive(Debug)]
pub struct Segmenter {
    x: u64,
    base: Vec<u64>,
}

impl Segmenter {
    pub fn new(x: u64) -> Self {
        let root = if x < 4 { 1 } else { x.sqrt() };
        Segmenter {
            x,
            base: simple_primes(root),
        }
    }

    pub fn limit(&self) -> u64 {
        self.x
    }

    /// Number of segments needed to cover `[2, x]`.
    pub fn num_segments(&self) -> u64 {
        if self.x < 2 {
            0
        } else {
            self.x / SEGMENT_SPAN + 1
        }
    }

    /// Inclusive bounds of segment `i`, clipped to `[2, x]`.
    pub fn segment_bounds(&self, i: u64) -> (u64, u64) {
        let lo = (i * SEGMENT_SPAN).max(2);
        let hi = ((i + 1) * SEGMENT_SPAN - 1).min(self.x);
        (lo, hi)
    }

    /// Replaces `out` with the primes of segment `i`, in increasing order.
    pub fn primes_in_segment(&self, i: u64, out: &mut Vec<u64>) {
        out.clear();
        let (lo, hi) = self.segment_bounds(i);
        if hi < lo {
            return;
        }
        if lo <= 2 && 2 <= hi {
            out.push(2);
        }
        // flags[j] represents the odd number first_odd + 2j.
        let first_odd = if lo % 2 == 0 { lo + 1 } else { lo };
        let first_odd = first_odd.max(3);
        if first_odd > hi {
            return;
        }
        let n_odd = ((hi - first_odd) / 2 + 1) as usize;
        let mut composite = vec![false; n_odd];
        for &p in self.base.iter().skip(1) {
            if p * p > hi {
                break;
            }
            // Smallest odd multiple of p in [max(p^2, first_odd), hi].
            let mut start = (first_odd + p - 1) / p * p;
            if start < p * p {
                start = p * p;
            }
            if start % 2 == 0 {
                start += p;
            }
            let mut j = (start - first_odd) / 2;
            while (j as usize) < n_odd {
                composite[j as usize] = true;
                j += p;
            }
        }
        for (j, &c) in composite.iter().enumerate() {
            if !c {
                out.push(first_odd + 2 * j as u64);
            }
        }
    }
}

/// All primes `<= x`, as a [`PrimeRange`] covering `[2, x]`.
///
/// Materializes the full list (8 bytes per prime), so it is intended for
/// `x` up to ~10^8; for larger limits iterate segments directly or use
/// [`for_each_prime`].
pub fn primes_up_to(x: u64) -> PrimeRange {
    let mut primes = Vec::new();
    if x >= SEGMENT_SPAN * 4 {
        let seg = Segmenter::new(x);
        let mut buf = Vec::new();
        for i in 0..seg.num_segments() {
            seg.primes_in_segment(i, &mut buf);
            primes.extend_from_slice(&buf);
        }
    } else {
        primes = simple_primes(x);
    }
    PrimeRange { lo: 2, hi: x, primes }
}

/// Visits every prime `<= x` in increasing order without materializing the
/// whole list.
pub fn for_each_prime(x: u64, mut f: impl FnMut(u64)) {
    let seg = Segmenter::new(x);
    let mut buf = Vec::new();
    for i in 0..seg.num_segments() {
        seg.primes_in_segment(i, &mut buf);
        for &p in &buf {
            f(p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_lists_match_by_hand() {
        assert_eq!(simple_primes(1), Vec::<u64>::new());
        assert_eq!(simple_primes(2), vec![2]);
        assert_eq!(simple_primes(3), vec![2, 3]);
        assert_eq!(simple_primes(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(simple_primes(31), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]);
    }

    #[test]
    fn prime_counts_at_powers_of_ten() {
        assert_eq!(primes_up_to(10).primes.len(), 4);
        assert_eq!(primes_up_to(100).primes.len(), 25);
        assert_eq!(primes_up_to(1_000).primes.len(), 168);
        assert_eq!(primes_up_to(10_000).primes.len(), 1_229);
        assert_eq!(primes_up_to(1_000_000).primes.len(), 78_498);
    }

    #[test]
    fn segmented_agrees_with_simple_across_boundaries() {
        // Pick a limit a little past one segment so the boundary is covered.
        let x = SEGMENT_SPAN + 1_000;
        let seg = Segmenter::new(x);
        let mut collected = Vec::new();
        let mut buf = Vec::new();
        for i in 0..seg.num_segments() {
            seg.primes_in_segment(i, &mut buf);
            collected.extend_from_slice(&buf);
        }
        assert_eq!(collected, simple_primes(x));
    }

    #[test]
    fn segment_bounds_partition_the_range() {
        let seg = Segmenter::new(10 * SEGMENT_SPAN + 17);
        let mut expected_lo = 2;
        for i in 0..seg.num_segments() {
            let (lo, hi) = seg.segment_bounds(i);
            assert_eq!(lo, expected_lo);
            assert!(hi >= lo);
            expected_lo = hi + 1;
        }
        assert_eq!(expected_lo, seg.limit() + 1);
    }

    #[test]
    fn for_each_prime_streams_in_order() {
        let mut seen = Vec::new();
        for_each_prime(1_000, |p| seen.push(p));
        assert_eq!(seen, simple_primes(1_000));
    }

    #[test]
    fn edge_limits() {
        assert_eq!(primes_up_to(0).primes, Vec::<u64>::new());
        assert_eq!(primes_up_to(1).primes, Vec::<u64>::new());
        assert_eq!(primes_up_to(2).primes, vec![2]);
    }
}
