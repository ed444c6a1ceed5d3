//! Polynomial arithmetic over a small prime field and deterministic Berlekamp
//! factorization. Used as the modular stage of the rational factorizer; the
//! prime always fits in u64 (products go through u128).

use alloc::vec;
use alloc::vec::Vec;

/// Coefficients ascending, reduced mod p, trailing zeros trimmed.
pub type MPoly = Vec<u64>;

#[derive(Clone, Copy)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn trim(&self, mut f: MPoly) -> MPoly {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    pub fn deg(&self, f: &MPoly) -> Option<usize> {
        if f.is_empty() {
            None
        } else {
            Some(f.len() - 1)
        }
    }

    pub fn p_sub(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for (i, c) in a.iter().enumerate() {
            out[i] = self.add(out[i], *c);
        }
        for (i, c) in b.iter().enumerate() {
            out[i] = self.sub(out[i], *c);
        }
        self.trim(out)
    }

    pub fn p_mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, ca) in a.iter().enumerate() {
            if *ca == 0 {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(*ca, *cb));
            }
        }
        self.trim(out)
    }

    pub fn p_scale(&self, a: &MPoly, c: u64) -> MPoly {
        if c == 0 {
            return vec![];
        }
        a.iter().map(|x| self.mul(*x, c)).collect()
    }

    pub fn monic(&self, a: &MPoly) -> MPoly {
        match a.last() {
            None => vec![],
            Some(&l) if l == 1 => a.clone(),
            Some(&l) => self.p_scale(a, self.inv(l)),
        }
    }

    /// (quotient, remainder) with divisor arbitrary nonzero.
    pub fn p_divrem(&self, a: &MPoly, b: &MPoly) -> (MPoly, MPoly) {
        let db = self.deg(b).expect("division by zero poly");
        if a.len() < b.len() {
            return (vec![], a.clone());
        }
        let linv = self.inv(*b.last().unwrap());
        let mut r = a.clone();
        let mut q = vec![0u64; a.len() - b.len() + 1];
        for k in (0..q.len()).rev() {
            let c = self.mul(r[k + db], linv);
            if c == 0 {
                continue;
            }
            q[k] = c;
            for (i, bc) in b.iter().enumerate() {
                r[k + i] = self.sub(r[k + i], self.mul(c, *bc));
            }
        }
        (self.trim(q), self.trim(r))
    }

    pub fn p_rem(&self, a: &MPoly, b: &MPoly) -> MPoly {
        self.p_divrem(a, b).1
    }

    pub fn p_gcd(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.p_rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
    pub fn p_xgcd(&self, a: &MPoly, b: &MPoly) -> (MPoly, MPoly, MPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], vec![]);
        let (mut t0, mut t1) = (vec![], vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.p_divrem(&r0, &r1);
            let ns = self.p_sub(&s0, &self.p_mul(&q, &s1));
            let nt = self.p_sub(&t0, &self.p_mul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = ns;
            t0 = t1;
            t1 = nt;
        }
        let l = *r0.last().expect("xgcd of two zero polys");
        let linv = self.inv(l);
        (
            self.p_scale(&r0, linv),
            self.p_scale(&s0, linv),
            self.p_scale(&t0, linv),
        )
    }

    pub fn p_deriv(&self, a: &MPoly) -> MPoly {
        if a.len() <= 1 {
            return vec![];
        }
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.mul(*c, (i as u64) % self.p))
                .collect(),
        )
    }

    pub fn p_powmod(&self, base: &MPoly, mut e: u64, m: &MPoly) -> MPoly {
        let mut acc = vec![1u64];
        let mut b = self.p_rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.p_rem(&self.p_mul(&acc, &b), m);
            }
            b = self.p_rem(&self.p_mul(&b, &b), m);
            e >>= 1;
        }
        acc
    }

    /// Berlekamp factorization of a monic squarefree polynomial mod p.
    /// Fully deterministic: nullspace basis + gcd splitting over all residues.
    pub fn berlekamp(&self, f: &MPoly) -> Vec<MPoly> {
        let n = self.deg(f).expect("factor of zero");
        if n <= 1 {
            return vec![self.monic(f)];
        }
        // Q matrix: row i = coefficients of x^(p*i) mod f
        let xp = self.p_powmod(&vec![0, 1], self.p, f);
        let mut rows: Vec<MPoly> = Vec::with_capacity(n);
        let mut cur = vec![1u64];
        for _ in 0..n {
            rows.push(cur.clone());
            cur = self.p_rem(&self.p_mul(&cur, &xp), f);
        }
        // nullspace of (Q - I)^T, i.e. vectors v (as polynomials) with v^p = v mod f
        let mut m = vec![vec![0u64; n]; n];
        for (i, row) in rows.iter().enumerate() {
            for j in 0..n {
                let mut v = row.get(j).copied().unwrap_or(0);
                if i == j {
                    v = self.sub(v, 1);
                }
                // (Q - I) transposed: column i, row j
                m[j][i] = v;
            }
        }
        let basis = self.nullspace(m);
        let r = basis.len();
        let mut factors = vec![self.monic(f)];
        if r == 1 {
            return factors;
        }
        for v in &basis {
            if factors.len() == r {
                break;
            }
            let vp = self.trim(v.clone());
            if self.deg(&vp).unwrap_or(0) == 0 {
                continue; // the constant vector never splits
            }
            let mut next: Vec<MPoly> = Vec::new();
            for g in factors {
                if self.deg(&g) == Some(1) {
                    next.push(g);
                    continue;
                }
                let mut rem = g.clone();
                for s in 0..self.p {
                    if self.deg(&rem) == Some(0) {
                        break;
                    }
                    let mut shifted = vp.clone();
                    shifted[0] = self.sub(shifted[0], s);
                    let d = self.p_gcd(&rem, &self.trim(shifted));
                    if let Some(dd) = self.deg(&d) {
                        if dd > 0 && dd < self.deg(&rem).unwrap() {
                            rem = self.p_divrem(&rem, &d).0;
                            next.push(d);
                        } else if dd > 0 && dd == self.deg(&rem).unwrap() {
                            // whole thing; keep going
                        }
                    }
                }
                if self.deg(&rem).map_or(false, |d| d > 0) {
                    next.push(self.monic(&rem));
                }
            }
            factors = next;
        }
        factors.sort_by(|a, b| {
            (a.len(), a.iter().rev().collect::<Vec<_>>())
                .cmp(&(b.len(), b.iter().rev().collect::<Vec<_>>()))
        });
        factors
    }

    /// Nullspace basis of a square matrix over F_p (column vectors).
    fn nullspace(&self, mut m: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
        let n = m.len();
        let mut pivot_col_of_row = vec![usize::MAX; n];
        let mut row = 0;
        for col in 0..n {
            let mut sel = None;
            for r in row..n {
                if m[r][col] != 0 {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            m.swap(row, sel);
            let inv = self.inv(m[row][col]);
            for c in 0..n {
                m[row][c] = self.mul(m[row][c], inv);
            }
            for r in 0..n {
                if r != row && m[r][col] != 0 {
                    let factor = m[r][col];
                    for c in 0..n {
                        let t = self.mul(factor, m[row][c]);
                        m[r][c] = self.sub(m[r][c], t);
                    }
                }
            }
            pivot_col_of_row[row] = col;
            row += 1;
            if row == n {
                break;
            }
        }
        let pivots: Vec<usize> = pivot_col_of_row[..row].to_vec();
        let mut basis = Vec::new();
        for free in 0..n {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = self.sub(0, m[r][free]);
            }
            basis.push(v);
        }
        basis
    }
}
