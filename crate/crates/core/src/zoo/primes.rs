//! The isomorphism between `⊕_{n∈Z} Z` and the multiplicative group of
//! positive rationals, through a fixed indexing of the primes by `Z`.
//!
//! Index `n` maps to the prime at position `2n-1` (n > 0) or `-2n` (n ≤ 0)
//! in the increasing list of primes: `p(0)=2, p(1)=3, p(-1)=5, p(2)=7,
//! p(-2)=11, ...`.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::sparse::SparseVec;
use super::ZooError;

/// Largest prime the table will ever be sieved to.
pub const PRIME_LIMIT: u64 = 1 << 24;

struct PrimeTable {
    sieved_to: u64,
    primes: Vec<u64>,
}

/// Primes below 2^16, readable without taking the table lock.
fn small_primes() -> &'static [u64] {
    static SMALL: OnceLock<Vec<u64>> = OnceLock::new();
    SMALL.get_or_init(|| sieve(1 << 16).primes)
}

fn table() -> &'static RwLock<PrimeTable> {
    static TABLE: OnceLock<RwLock<PrimeTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(sieve(1 << 12)))
}

fn sieve(bound: u64) -> PrimeTable {
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    PrimeTable {
        sieved_to: bound,
        primes,
    }
}

fn ensure_sieved(bound: u64) -> Result<(), ZooError> {
    if bound > PRIME_LIMIT {
        return Err(ZooError::PrimeLimit { bound });
    }
    if table().read().unwrap().sieved_to >= bound {
        return Ok(());
    }
    let mut t = table().write().unwrap();
    if t.sieved_to < bound {
        let target = bound.max(t.sieved_to * 2).min(PRIME_LIMIT);
        *t = sieve(target);
    }
    Ok(())
}

/// The prime at 0-based `position` in increasing order.
pub fn nth_prime(position: usize) -> Result<u64, ZooError> {
    if let Some(&p) = small_primes().get(position) {
        return Ok(p);
    }
    loop {
        {
            let t = table().read().unwrap();
            if let Some(&p) = t.primes.get(position) {
                return Ok(p);
            }
            if t.sieved_to >= PRIME_LIMIT {
                return Err(ZooError::PrimeLimit { bound: u64::MAX });
            }
        }
        let current = table().read().unwrap().sieved_to;
        ensure_sieved((current * 2).min(PRIME_LIMIT))?;
    }
}

/// Position of `p` in the increasing list of primes, `None` if not prime.
pub fn prime_position(p: u64) -> Result<Option<usize>, ZooError> {
    if p < 1 << 16 {
        return Ok(small_primes().binary_search(&p).ok());
    }
    ensure_sieved(p)?;
    Ok(table().read().unwrap().primes.binary_search(&p).ok())
}

fn position_of_index(n: i64) -> usize {
    if n > 0 {
        (2 * n - 1) as usize
    } else {
        (-2 * n) as usize
    }
}

fn index_of_position(pos: usize) -> i64 {
    let pos = pos as i64;
    if pos % 2 == 1 {
        (pos + 1) / 2
    } else {
        -pos / 2
    }
}

/// The prime attached to lamp index `n`.
pub fn prime_for_index(n: i64) -> Result<u64, ZooError> {
    nth_prime(position_of_index(n))
}

/// Inverse of [`prime_for_index`].
pub fn index_for_prime(p: u64) -> Result<Option<i64>, ZooError> {
    Ok(prime_position(p)?.map(index_of_position))
}

/// `∏ p(n)^{f(n)}` as an exact positive rational.
pub fn rat_of_base(f: &SparseVec<i64>) -> BigRational {
    rat_of_shifted_base(f, 0)
}

/// `rat_of_base(τ_{-k} f)`, without building the shifted vector.
pub fn rat_of_shifted_base(f: &SparseVec<i64>, k: i64) -> BigRational {
    let mut num = Accumulator::default();
    let mut den = Accumulator::default();
    for &(n, e) in f.iter() {
        let p = prime_for_index(n - k).expect("lamp index within prime table");
        let acc = if e > 0 { &mut num } else { &mut den };
        for _ in 0..e.unsigned_abs() {
            acc.mul(p);
        }
    }
    BigRational::new_raw(num.finish(), den.finish())
}

/// A product of primes kept in a machine word until it overflows.
struct Accumulator {
    small: u128,
    big: Option<BigInt>,
}

impl Default for Accumulator {
    fn default() -> Self {
        Accumulator { small: 1, big: None }
    }
}

impl Accumulator {
    fn mul(&mut self, p: u64) {
        match self.small.checked_mul(u128::from(p)) {
            Some(v) => self.small = v,
            None => {
                let big = self.big.get_or_insert_with(BigInt::one);
                *big *= BigInt::from(self.small);
                self.small = u128::from(p);
            }
        }
    }

    fn finish(self) -> BigInt {
        match self.big {
            None => BigInt::from(self.small),
            Some(b) => b * BigInt::from(self.small),
        }
    }
}

/// Trial division of `m` by the sieved primes, up to `sqrt(m)` or the end
/// of the table. Returns the cofactor left over.
fn divide_out(mut m: u64, primes: &[u64], out: &mut Vec<(u64, i64)>) -> u64 {
    for &p in primes {
        if p.saturating_mul(p) > m {
            break;
        }
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    m
}

/// Prime factorization of a positive integer as `(prime, exponent)` pairs.
fn factor(n: &BigUint) -> Result<Vec<(u64, i64)>, ZooError> {
    let mut out = Vec::new();
    if let Some(m) = n.to_u64() {
        let root = (m as f64).sqrt() as u64 + 1;
        let rest = if root < 1 << 16 {
            divide_out(m, small_primes(), &mut out)
        } else {
            ensure_sieved(root.min(PRIME_LIMIT))?;
            divide_out(m, &table().read().unwrap().primes, &mut out)
        };
        if rest > 1 {
            if rest.isqrt() > PRIME_LIMIT {
                return Err(ZooError::PrimeLimit { bound: rest });
            }
            out.push((rest, 1));
        }
        return Ok(out);
    }
    let mut m = n.clone();
    let mut pos = 0;
    while !m.is_one() {
        if let Some(small) = m.to_u64() {
            out.extend(factor(&BigUint::from(small))?);
            break;
        }
        let p = nth_prime(pos)?;
        let pb = BigUint::from(p);
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        pos += 1;
    }
    Ok(out)
}

/// The finitely supported exponent map of a positive rational.
pub fn base_of_rat(r: &BigRational) -> Result<SparseVec<i64>, ZooError> {
    if !r.is_positive() {
        return Err(ZooError::NonPositive(r.to_string()));
    }
    let mut entries = Vec::new();
    for (part, sign) in [(r.numer(), 1i64), (r.denom(), -1i64)] {
        let magnitude = part.magnitude();
        for (p, e) in factor(magnitude)? {
            let n = index_for_prime(p)?.expect("factor is prime");
            entries.push((n, sign * e));
        }
    }
    Ok(SparseVec::from_entries(entries))
}

/// Applies the prime relabelling `p(j) ↦ p(j - steps)` to a positive
/// rational. This is how a base element acting on coordinate 0 acts on
/// coordinate `steps`.
pub fn shift_primes(r: &BigRational, steps: i64) -> Result<BigRational, ZooError> {
    if steps == 0 {
        return Ok(r.clone());
    }
    Ok(rat_of_base(&base_of_rat(r)?.shift(-steps)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn zigzag_indexing() {
        let got: Vec<u64> = [0, 1, -1, 2, -2, 3, -3]
            .iter()
            .map(|&n| prime_for_index(n).unwrap())
            .collect();
        assert_eq!(got, vec![2, 3, 5, 7, 11, 13, 17]);
        for n in -40..40 {
            let p = prime_for_index(n).unwrap();
            assert_eq!(index_for_prime(p).unwrap(), Some(n));
        }
        assert_eq!(index_for_prime(9).unwrap(), None);
    }

    #[test]
    fn rat_of_base_examples() {
        assert_eq!(rat_of_base(&SparseVec::from_entries([(0, 2), (1, 1)])), rat(12, 1));
        assert_eq!(rat_of_base(&SparseVec::zero()), rat(1, 1));
        assert_eq!(rat_of_base(&SparseVec::from_entries([(0, -1), (1, -1)])), rat(1, 6));
    }

    #[test]
    fn base_of_rat_examples() {
        assert_eq!(
            base_of_rat(&rat(12, 1)).unwrap(),
            SparseVec::from_entries([(0, 2), (1, 1)])
        );
        assert!(base_of_rat(&rat(1, 1)).unwrap().is_zero());
        // 50 = 2·5², 21 = 3·7
        assert_eq!(
            base_of_rat(&rat(50, 21)).unwrap(),
            SparseVec::from_entries([(0, 1), (-1, 2), (1, -1), (2, -1)])
        );
    }

    #[test]
    fn base_of_rat_rejects_non_positive() {
        assert!(matches!(base_of_rat(&rat(0, 1)), Err(ZooError::NonPositive(_))));
        assert!(matches!(base_of_rat(&rat(-3, 2)), Err(ZooError::NonPositive(_))));
    }

    #[test]
    fn large_values_factor() {
        let big: BigInt = num_traits::Pow::pow(&BigInt::from(3u32), 50u32) * BigInt::from(1_000_003u64);
        let r = BigRational::new(big, BigInt::from(7 * 7 * 11));
        let f = base_of_rat(&r).unwrap();
        assert_eq!(rat_of_base(&f), r);
    }

    #[test]
    fn shift_primes_moves_indices() {
        // 2 = p(0) becomes p(-1) = 5
        assert_eq!(shift_primes(&rat(2, 1), 1).unwrap(), rat(5, 1));
        assert_eq!(shift_primes(&rat(5, 3), -1).unwrap(), rat(2, 7));
    }
}
