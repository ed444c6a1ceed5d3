//! Exact scalar arithmetic over Q.
//!
//! Values are arbitrary-precision rationals kept in lowest terms with a
//! positive denominator (`num_rational` maintains that invariant on every
//! operation). On top of the ring operations this module provides the exact
//! predicates the Galois-theoretic layer depends on: perfect-square and
//! fourth-power tests, square roots, and squarefree kernels of rationals.

use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for the rational n/d.
pub fn rat2(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Exact integer square root if `n` is a perfect square.
pub fn int_sqrt_exact(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact integer fourth root if `n` is a perfect fourth power.
pub fn int_fourth_root_exact(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let r = n.nth_root(4);
    if &(&r * &r * &r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Whether the rational is a square in Q. Zero counts as a square.
pub fn is_square(q: &Rat) -> bool {
    sqrt_exact(q).is_some()
}

/// Exact rational square root, if one exists in Q.
pub fn sqrt_exact(q: &Rat) -> Option<Rat> {
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(Rat::new(n, d))
}

/// Whether the rational is a fourth power in Q.
pub fn is_fourth_power(q: &Rat) -> bool {
    int_fourth_root_exact(q.numer()).is_some() && int_fourth_root_exact(q.denom()).is_some()
}

/// Whether Q(sqrt(x)) = Q(sqrt(y)) for nonzero x, y: true iff x*y is a square.
pub fn same_quadratic_field(x: &Rat, y: &Rat) -> bool {
    is_square(&(x * y))
}

/// Squarefree kernel of a nonzero rational: the unique squarefree integer d
/// with q = d * (square of a rational). Q(sqrt(q)) = Q(sqrt(d)); d = 1 means
/// q is already a square.
pub fn squarefree_kernel(q: &Rat) -> Int {
    assert!(!q.is_zero(), "kernel of zero is undefined");
    // q = n/m ~ n*m modulo squares
    let nm = q.numer() * q.denom();
    let (sign, mag) = (nm.sign(), nm.magnitude().clone());
    let mut kernel = BigUint::one();
    for (p, e) in factorize(&mag) {
        if e % 2 == 1 {
            kernel *= p;
        }
    }
    let k = Int::from_biguint(Sign::Plus, kernel);
    if sign == Sign::Minus {
        -k
    } else {
        k
    }
}

/// Prime factorization of a positive integer as (prime, exponent) pairs,
/// sorted by prime. Trial division for small primes, then Brent's variant of
/// Pollard's rho with Miller-Rabin primality certification.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero());
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let mut push = |p: BigUint| {
        for item in out.iter_mut() {
            if item.0 == p {
                item.1 += 1;
                return;
            }
        }
        out.push((p, 1));
    };
    let mut m = n.clone();
    for p in SMALL_PRIMES {
        let bp = BigUint::from(*p);
        while (&m % &bp).is_zero() {
            m /= &bp;
            push(bp.clone());
        }
        if m.is_one() {
            break;
        }
    }
    let mut stack = Vec::new();
    if !m.is_one() {
        stack.push(m);
    }
    while let Some(v) = stack.pop() {
        if is_prime(&v) {
            push(v);
            continue;
        }
        let d = pollard_rho(&v);
        stack.push(&v / &d);
        stack.push(d);
    }
    out.sort();
    out
}

const SMALL_PRIMES: &[u64] = &[
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
];

/// Miller-Rabin. Deterministic for inputs below 3.3 * 10^24 with the fixed
/// base set; for larger inputs the same bases give a primality test whose
/// error probability is far below any practical concern (inputs here come
/// from user-supplied parameters, not adversaries).
pub fn is_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for p in SMALL_PRIMES {
        let bp = BigUint::from(*p);
        if n == &bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle Pollard rho; input must be composite, odd, and not a prime power
/// caught by trial division. Deterministically retries with increasing offsets.
fn pollard_rho(n: &BigUint) -> BigUint {
    // perfect powers first: rho can stall on them
    for k in [2u32, 3, 4, 5] {
        let r = n.nth_root(k);
        if &num_traits::pow::pow(r.clone(), k as usize) == n {
            return r;
        }
    }
    let one = BigUint::one();
    for c in 1u64..64 {
        let cc = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &cc) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        let mut count = 0u64;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break; // cycle without factor; try next c
            }
            d = diff.gcd(n);
            count += 1;
            if count > 1 << 24 {
                break;
            }
        }
        if !d.is_one() && &d != n {
            return d;
        }
    }
    panic!("pollard_rho failed on composite input");
}

/// All divisors of a nonzero integer magnitude, unsorted.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut out = alloc::vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let base = out.clone();
        let mut pw = BigUint::one();
        for _ in 0..e {
            pw *= &p;
            for b in &base {
                out.push(b * &pw);
            }
        }
    }
    out
}
