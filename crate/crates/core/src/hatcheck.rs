//! Brute-force combinatorial oracle: guests from four clubs scramble for hats
//! that carry only a club insignia; the signed count
//!
//! ```text
//! #{events with an even number of wrongly-hatted guests}
//!   - #{events with an odd number}
//! ```
//!
//! equals `2^{a+b+c+d} Q(a,b,c,d)` and is strictly positive. An *event* is an
//! assignment of hat insignias, so hats within one club are interchangeable:
//! enumerating all `n!` permutations of distinct hats counts every event
//! exactly `a! b! c! d!` times, and the tally divides out exactly.
//! Enumeration is deliberately the dumbest correct algorithm (plain
//! permutation iteration with an incremental wrong-count) so the check stays
//! independent of the analytic stack it cross-validates.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;

use crate::error::Error;
use crate::qmatrix::q_coefficient;
use crate::rational::{pi_lower, Rational};

/// Default cap on `n = a+b+c+d`; `10! = 3,628,800` permutations.
pub const DEFAULT_CEILING: usize = 10;

/// Hard cap honored by the CLI.
pub const HARD_CEILING: usize = 12;

/// Guests partitioned into four contiguous club blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClubPartition {
    pub sizes: (usize, usize, usize, usize),
    pub n: usize,
    block_of: Vec<u8>,
}

impl ClubPartition {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        let n = a + b + c + d;
        let mut block_of = Vec::with_capacity(n);
        for (club, size) in [(0u8, a), (1, b), (2, c), (3, d)] {
            block_of.extend(std::iter::repeat_n(club, size));
        }
        ClubPartition {
            sizes: (a, b, c, d),
            n,
            block_of,
        }
    }

    pub fn block_of(&self, position: usize) -> u8 {
        self.block_of[position]
    }
}

/// Signed permutation count at the default enumeration ceiling.
pub fn signed_count(partition: &ClubPartition) -> Result<BigInt, Error> {
    signed_count_with_ceiling(partition, DEFAULT_CEILING)
}

/// Signed event count, rejecting `n` above the given ceiling. Enumerates all
/// `n!` hat permutations and divides the tally by `a! b! c! d!` (exact), since
/// permutations that only swap hats within a club produce the same event.
pub fn signed_count_with_ceiling(
    partition: &ClubPartition,
    ceiling: usize,
) -> Result<BigInt, Error> {
    if partition.n > ceiling {
        return Err(Error::EnumerationCeiling {
            n: partition.n,
            ceiling,
        });
    }
    let tally = BigInt::from(signed_tally(&partition.block_of));
    let (a, b, c, d) = partition.sizes;
    let orbit = crate::moments::factorial(a)
        * crate::moments::factorial(b)
        * crate::moments::factorial(c)
        * crate::moments::factorial(d);
    let (count, rem) = num_integer::Integer::div_rem(&tally, &orbit);
    debug_assert!(rem.is_zero(), "within-club orbits must divide the tally");
    Ok(count)
}

/// Heap's algorithm over all permutations, maintaining the wrong-hat count
/// incrementally across each transposition.
fn signed_tally(block_of: &[u8]) -> i64 {
    let n = block_of.len();
    if n == 0 {
        return 1; // the empty permutation has zero wrong hats
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut wrong = 0usize; // identity: everyone has the right hat
    let mut tally: i64 = 1;
    let mut counters = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            let j = if i % 2 == 0 { 0 } else { counters[i] };
            for p in [j, i] {
                if block_of[perm[p]] != block_of[p] {
                    wrong -= 1;
                }
            }
            perm.swap(j, i);
            for p in [j, i] {
                if block_of[perm[p]] != block_of[p] {
                    wrong += 1;
                }
            }
            tally += if wrong.is_multiple_of(2) { 1 } else { -1 };
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    tally
}

/// One row of the identity sweep.
#[derive(Clone, Debug)]
pub struct HatcheckRecord {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub signed_count: BigInt,
    /// `2^{a+b+c+d} Q(a,b,c,d)`; an integer in every verified case.
    pub two_pow_n_times_q: Rational,
    pub matched: bool,
}

impl HatcheckRecord {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "d": self.d,
            "signed_count": self.signed_count.to_string(),
            "two_pow_n_times_Q": self.two_pow_n_times_q.to_string(),
            "match": self.matched,
        })
    }
}

/// Result of an exhaustive identity sweep over `a+b+c+d <= max_n`.
#[derive(Clone, Debug)]
pub struct HatcheckSweep {
    pub max_n: usize,
    pub all_match: bool,
    pub all_positive: bool,
    pub records: Vec<HatcheckRecord>,
}

/// Checks `signed_count = 2^n Q(a,b,c,d)` exactly for every tuple with
/// `a+b+c+d <= max_n`, asserting integrality of the product along the way.
pub fn verify_hatcheck_identity(max_n: usize) -> Result<HatcheckSweep, Error> {
    if max_n > HARD_CEILING {
        return Err(Error::EnumerationCeiling {
            n: max_n,
            ceiling: HARD_CEILING,
        });
    }
    let mut records = Vec::new();
    let mut all_match = true;
    let mut all_positive = true;
    for_each_tuple(max_n, |a, b, c, d| {
        let n = a + b + c + d;
        let partition = ClubPartition::new(a, b, c, d);
        let signed = signed_count_with_ceiling(&partition, max_n).expect("n <= max_n");
        let product =
            Rational::from_bigint(BigInt::from(2).pow(n as u32)) * q_coefficient(a, b, c, d);
        let matched =
            product.is_integer() && Rational::from_bigint(signed.clone()) == product;
        all_match &= matched;
        all_positive &= signed > BigInt::from(0);
        records.push(HatcheckRecord {
            a,
            b,
            c,
            d,
            signed_count: signed,
            two_pow_n_times_q: product,
            matched,
        });
    });
    Ok(HatcheckSweep {
        max_n,
        all_match,
        all_positive,
        records,
    })
}

/// Conjectural lower bound `signed_count >= 2^{n+1} / (pi (n+1))` for balanced
/// tuples `a+b = c+d`, certified via the rational lower bound for pi. This is
/// evidence for an open bound, not a theorem.
pub fn verify_hatcheck_lower_bound(max_n: usize) -> Result<bool, Error> {
    if max_n > HARD_CEILING {
        return Err(Error::EnumerationCeiling {
            n: max_n,
            ceiling: HARD_CEILING,
        });
    }
    let pi_low = pi_lower();
    let mut holds = true;
    for_each_tuple(max_n, |a, b, c, d| {
        if a + b != c + d {
            return;
        }
        let n = a + b + c + d;
        let partition = ClubPartition::new(a, b, c, d);
        let signed = signed_count_with_ceiling(&partition, max_n).expect("n <= max_n");
        let lhs =
            Rational::from_bigint(signed) * &pi_low * Rational::from_int(n as i64 + 1);
        let rhs = Rational::from_bigint(BigInt::from(2).pow(n as u32 + 1));
        holds &= lhs >= rhs;
    });
    Ok(holds)
}

fn for_each_tuple(max_n: usize, mut f: impl FnMut(usize, usize, usize, usize)) {
    for a in 0..=max_n {
        for b in 0..=max_n - a {
            for c in 0..=max_n - a - b {
                for d in 0..=max_n - a - b - c {
                    f(a, b, c, d);
                }
            }
        }
    }
}
