//! Zassenhaus factorization of primitive squarefree integer polynomials:
//! Berlekamp mod a good prime, quadratic multifactor Hensel lifting past twice
//! the Mignotte bound, then exhaustive subset recombination (fine at the
//! degrees this crate deals with, <= 24).

use alloc::vec;
use alloc::vec::Vec;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{Fp, MPoly};
use crate::poly::zpoly::{self, ZPoly};
use crate::scalar::Int;

/// Primes > 30 used for good-reduction selection, in order.
const CANDIDATE_PRIMES: &[u64] = &[
    31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233,
    239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313,
];

fn reduce_mod(f: &ZPoly, fp: &Fp) -> MPoly {
    let p = Int::from(fp.p);
    fp.trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(&p);
                r.to_u64_digits().1.first().copied().unwrap_or(0)
            })
            .collect(),
    )
}

/// Smallest prime > 30 with good reduction: it divides neither the leading
/// coefficient nor the discriminant (checked as squarefreeness mod p).
fn choose_prime(f: &ZPoly) -> Fp {
    for &p in CANDIDATE_PRIMES {
        let fp = Fp::new(p);
        let fbar = reduce_mod(f, &fp);
        if fp.deg(&fbar) != zpoly::deg(f) {
            continue; // p | lc
        }
        let d = fp.p_gcd(&fbar, &fp.p_deriv(&fbar));
        if fp.deg(&d) == Some(0) {
            return fp;
        }
    }
    unreachable!("no good prime among candidates for a squarefree input");
}

/// Landau-Mignotte style bound: any factor of f over Z has coefficients
/// bounded by 2^n * ||f||_2 * |lc(f)| in absolute value (safe overestimate).
fn coefficient_bound(f: &ZPoly) -> Int {
    let n = zpoly::deg(f).unwrap();
    let norm2_sq: Int = f.iter().map(|c| c * c).sum();
    let norm2 = norm2_sq.sqrt() + 1;
    (Int::one() << n) * norm2 * zpoly::lc(f).abs()
}

// ---------------------------------------------------------------------------
// Hensel lifting (monic, multifactor, quadratic) over Z/p^k
// ---------------------------------------------------------------------------

/// Polynomial arithmetic mod m (m = p^k), coefficients in [0, m).
struct ModM {
    m: Int,
}

impl ModM {
    fn red(&self, f: &[Int]) -> Vec<Int> {
        let mut v: Vec<Int> = f.iter().map(|c| c.mod_floor(&self.m)).collect();
        while v.last().map_or(false, Zero::is_zero) {
            v.pop();
        }
        v
    }

    fn mul(&self, a: &[Int], b: &[Int]) -> Vec<Int> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![Int::zero(); a.len() + b.len() - 1];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                out[i + j] += ca * cb;
            }
        }
        self.red(&out)
    }

    fn add(&self, a: &[Int], b: &[Int]) -> Vec<Int> {
        let n = a.len().max(b.len());
        let mut out = vec![Int::zero(); n];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] += c;
        }
        self.red(&out)
    }

    fn sub(&self, a: &[Int], b: &[Int]) -> Vec<Int> {
        let n = a.len().max(b.len());
        let mut out = vec![Int::zero(); n];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] -= c;
        }
        self.red(&out)
    }

    /// Division by a monic divisor.
    fn divrem_monic(&self, a: &[Int], b: &[Int]) -> (Vec<Int>, Vec<Int>) {
        debug_assert!(b.last().map_or(false, One::is_one));
        let db = b.len() - 1;
        let mut r: Vec<Int> = a.to_vec();
        if r.len() < b.len() {
            return (vec![], self.red(&r));
        }
        let mut q = vec![Int::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db].mod_floor(&self.m);
            if c.is_zero() {
                q[k] = c;
                continue;
            }
            for (i, bc) in b.iter().enumerate() {
                let t = bc * &c;
                r[k + i] -= t;
            }
            q[k] = c;
        }
        (self.red(&q), self.red(&r))
    }
}

struct Node {
    /// product of the leaf factors below this node, mod current modulus
    prod: Vec<Int>,
    kind: NodeKind,
}

enum NodeKind {
    Leaf(usize),
    Pair {
        left: usize,
        right: usize,
        /// Bezout data: sigma*left.prod + tau*right.prod == 1 mod current modulus
        sigma: Vec<Int>,
        tau: Vec<Int>,
    },
}

/// Lift the monic factorization f == prod(factors) (mod p) to mod p^(2^r) >= target.
/// `f` must be monic mod the final modulus (caller passes f * lc^-1 reduced).
fn hensel_lift(f_int: &ZPoly, factors_p: &[MPoly], fp: &Fp, target: &Int) -> (Vec<Vec<Int>>, Int) {
    // build a balanced tree over the factors
    let mut nodes: Vec<Node> = Vec::new();
    let mut layer: Vec<usize> = Vec::new();
    for (i, g) in factors_p.iter().enumerate() {
        nodes.push(Node {
            prod: g.iter().map(|&c| Int::from(c)).collect(),
            kind: NodeKind::Leaf(i),
        });
        layer.push(i);
    }
    while layer.len() > 1 {
        let mut next = Vec::new();
        let mut it = layer.chunks(2);
        for pair in &mut it {
            if pair.len() == 1 {
                next.push(pair[0]);
                continue;
            }
            let (l, r) = (pair[0], pair[1]);
            let lp: MPoly = nodes[l].prod.iter().map(int_to_u64).collect();
            let rp: MPoly = nodes[r].prod.iter().map(int_to_u64).collect();
            let (g, s, t) = fp.p_xgcd(&lp, &rp);
            debug_assert_eq!(g, vec![1u64]);
            let prod = fp.p_mul(&lp, &rp);
            nodes.push(Node {
                prod: prod.iter().map(|&c| Int::from(c)).collect(),
                kind: NodeKind::Pair {
                    left: l,
                    right: r,
                    sigma: s.iter().map(|&c| Int::from(c)).collect(),
                    tau: t.iter().map(|&c| Int::from(c)).collect(),
                },
            });
            next.push(nodes.len() - 1);
        }
        layer = next;
    }
    let root = layer[0];

    let mut modulus = Int::from(fp.p);
    while &modulus < target {
        let m2 = &modulus * &modulus;
        let mm = ModM { m: m2.clone() };
        // monic image of f mod m2
        let lc = f_int.last().unwrap().mod_floor(&m2);
        let lcinv = mod_inverse(&lc, &m2);
        let fmon: Vec<Int> = f_int.iter().map(|c| (c * &lcinv).mod_floor(&m2)).collect();
        lift_node(&mut nodes, root, &mm.red(&fmon), &mm);
        modulus = m2;
    }
    let leaves: Vec<Vec<Int>> = {
        let mut out = vec![Vec::new(); factors_p.len()];
        for n in &nodes {
            if let NodeKind::Leaf(i) = n.kind {
                out[i] = n.prod.clone();
            }
        }
        out
    };
    (leaves, modulus)
}

fn int_to_u64(c: &Int) -> u64 {
    c.to_u64_digits().1.first().copied().unwrap_or(0)
}

/// One quadratic Hensel step at `node`: f == prod must hold mod m, and is
/// lifted to hold mod m^2 (mm.m is already m^2). Recurses into children.
fn lift_node(nodes: &mut Vec<Node>, idx: usize, f: &[Int], mm: &ModM) {
    let (left, right, sigma, tau) = match &nodes[idx].kind {
        NodeKind::Leaf(_) => {
            nodes[idx].prod = mm.red(f);
            return;
        }
        NodeKind::Pair {
            left,
            right,
            sigma,
            tau,
        } => (*left, *right, sigma.clone(), tau.clone()),
    };
    let g = nodes[left].prod.clone();
    let h = nodes[right].prod.clone();
    // e = f - g*h mod m^2
    let e = mm.sub(f, &mm.mul(&g, &h));
    // (q, r) = divrem(sigma*e, h): h is monic
    let (q, r) = mm.divrem_monic(&mm.mul(&sigma, &e), &h);
    let g_new = mm.add(&g, &mm.add(&mm.mul(&tau, &e), &mm.mul(&q, &g)));
    let h_new = mm.add(&h, &r);
    // lift the Bezout pair: b = sigma*g' + tau*h' - 1
    let b = mm.sub(
        &mm.add(&mm.mul(&sigma, &g_new), &mm.mul(&tau, &h_new)),
        &[Int::one()],
    );
    let (c, d) = mm.divrem_monic(&mm.mul(&sigma, &b), &h_new);
    let sigma_new = mm.sub(&sigma, &d);
    let tau_new = mm.sub(&mm.sub(&tau, &mm.mul(&tau, &b)), &mm.mul(&c, &g_new));
    nodes[idx].prod = mm.mul(&g_new, &h_new);
    if let NodeKind::Pair {
        sigma: s, tau: t, ..
    } = &mut nodes[idx].kind
    {
        *s = sigma_new;
        *t = tau_new;
    }
    lift_node(nodes, left, &g_new, mm);
    lift_node(nodes, right, &h_new, mm);
}

fn mod_inverse(a: &Int, m: &Int) -> Int {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "non-invertible leading coefficient");
    e.x.mod_floor(m)
}

fn symmetric(c: &Int, m: &Int) -> Int {
    let r = c.mod_floor(m);
    if &(&r * 2) > m {
        r - m
    } else {
        r
    }
}

// ---------------------------------------------------------------------------
// Recombination
// ---------------------------------------------------------------------------

/// Factor a primitive squarefree polynomial over Z into its irreducible
/// factors over Z (primitive, leading coefficients positive except possibly
/// a sign carried by the first factor; callers normalize to monic over Q).
pub fn factor_primitive_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let n = zpoly::deg(f).expect("factor of zero");
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![f.clone()];
    }
    let fp = choose_prime(f);
    let fbar = fp.monic(&reduce_mod(f, &fp));
    let factors_p = fp.berlekamp(&fbar);
    if factors_p.len() == 1 {
        return vec![f.clone()];
    }
    let bound = coefficient_bound(f) * 2 + 1;
    let (lifted, modulus) = hensel_lift(f, &factors_p, &fp, &bound);

    // exhaustive subset recombination, cardinality-ordered
    let lc = zpoly::lc(f).clone();
    let mut remaining: Vec<Vec<Int>> = lifted;
    let mut out: Vec<ZPoly> = Vec::new();
    let mut current = f.clone();
    let mut card = 1usize;
    'outer: while 2 * card <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idxs, card) {
            if let Some(g) = try_subset(&current, &remaining, &combo, &lc, &modulus) {
                out.push(g.clone());
                current = exact_div_z(&current, &g);
                let keep: Vec<Vec<Int>> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                remaining = keep;
                continue 'outer;
            }
        }
        card += 1;
    }
    if zpoly::deg(&current).unwrap_or(0) > 0 {
        out.push(zpoly::primitive_part(&current));
    }
    out
}

fn exact_div_z(a: &ZPoly, b: &ZPoly) -> ZPoly {
    // both primitive, b | a over Q hence over Z up to unit
    let fa = crate::UniPoly::from_zpoly(a);
    let fb = crate::UniPoly::from_zpoly(b);
    let q = fa.exact_div(&fb).expect("division certified before call");
    zpoly::primitive_part(&q.primitive_z())
}

fn try_subset(
    current: &ZPoly,
    factors: &[Vec<Int>],
    combo: &[usize],
    lc: &Int,
    modulus: &Int,
) -> Option<ZPoly> {
    // quick test on the constant coefficient
    let mut c0 = lc.mod_floor(modulus);
    for &i in combo {
        c0 = (&c0 * factors[i].first().cloned().unwrap_or_else(Int::zero)).mod_floor(modulus);
    }
    let c0 = symmetric(&c0, modulus);
    let f0 = lc * &current[0];
    if !c0.is_zero() && !(&f0 % &c0).is_zero() {
        return None;
    }
    // full candidate
    let mm = ModM { m: modulus.clone() };
    let mut prod: Vec<Int> = vec![lc.mod_floor(modulus)];
    for &i in combo {
        prod = mm.mul(&prod, &factors[i]);
    }
    let cand: ZPoly = zpoly::trim(prod.iter().map(|c| symmetric(c, modulus)).collect());
    if cand.is_empty() {
        return None;
    }
    let cand = zpoly::primitive_part(&cand);
    let fa = crate::UniPoly::from_zpoly(current);
    let fb = crate::UniPoly::from_zpoly(&cand);
    match fa.div_rem(&fb) {
        Ok((_, r)) if r.is_zero() => Some(cand),
        _ => None,
    }
}

/// All cardinality-k index subsets in lexicographic order.
fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
