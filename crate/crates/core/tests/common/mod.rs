//! Independent reference implementations used by the integration tests.
//!
//! Everything here works on explicit 1-based digit tuples through `get` and
//! `set`, never through the library's packed layouts or fast paths.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use prokit::hypermat::Hypermatrix;
use prokit::semiring::{ComplexF64, Rational, Semiring};
use rand::Rng;

/// All digit tuples of length `len` over `1..=dim`, lexicographic.
pub fn tuples(dim: usize, len: usize) -> Vec<Vec<usize>> {
    let mut acc = vec![vec![]];
    for _ in 0..len {
        acc = acc
            .into_iter()
            .flat_map(|t| {
                (1..=dim).map(move |d| {
                    let mut t = t.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
    }
    acc
}

fn cat(a: &[usize], b: &[usize]) -> Vec<usize> {
    [a, b].concat()
}

pub fn naive_basis<S: Semiring>(n: usize, p: usize, q: usize, i: &[usize], j: &[usize]) -> Hypermatrix<S> {
    let mut h = Hypermatrix::zeros(n, p, q).unwrap();
    h.set(i, j, S::one()).unwrap();
    h
}

pub fn naive_hcomp<S: Semiring>(a: &Hypermatrix<S>, b: &Hypermatrix<S>) -> Hypermatrix<S> {
    let n = a.dim();
    let mut c = Hypermatrix::zeros(n, a.out_rank() + b.out_rank(), a.in_rank() + b.in_rank()).unwrap();
    for i in tuples(n, a.out_rank()) {
        for j in tuples(n, a.in_rank()) {
            for i2 in tuples(n, b.out_rank()) {
                for j2 in tuples(n, b.in_rank()) {
                    let v = a.get(&i, &j).unwrap().mul(b.get(&i2, &j2).unwrap());
                    c.set(&cat(&i, &i2), &cat(&j, &j2), v).unwrap();
                }
            }
        }
    }
    c
}

pub fn naive_vcomp<S: Semiring>(top: &Hypermatrix<S>, bottom: &Hypermatrix<S>) -> Hypermatrix<S> {
    let n = top.dim();
    assert_eq!(top.in_rank(), bottom.out_rank());
    let mut c = Hypermatrix::zeros(n, top.out_rank(), bottom.in_rank()).unwrap();
    for i in tuples(n, top.out_rank()) {
        for j in tuples(n, bottom.in_rank()) {
            let mut s = S::zero();
            for k in tuples(n, top.in_rank()) {
                s = s.add(&top.get(&i, &k).unwrap().mul(bottom.get(&k, &j).unwrap()));
            }
            c.set(&i, &j, s).unwrap();
        }
    }
    c
}

/// `(i % m, i / m)` digitwise with `i = (hi - 1)·m + lo`.
fn split(i: &[usize], m: usize) -> (Vec<usize>, Vec<usize>) {
    i.iter().map(|&d| ((d - 1) % m + 1, (d - 1) / m + 1)).unzip()
}

pub fn naive_kronecker<S: Semiring>(a: &Hypermatrix<S>, b: &Hypermatrix<S>) -> Hypermatrix<S> {
    let (m, n) = (a.dim(), b.dim());
    let mut c = Hypermatrix::zeros(m * n, a.out_rank(), a.in_rank()).unwrap();
    for i in tuples(m * n, a.out_rank()) {
        for j in tuples(m * n, a.in_rank()) {
            let ((il, ih), (jl, jh)) = (split(&i, m), split(&j, m));
            c.set(&i, &j, a.get(&il, &jl).unwrap().mul(b.get(&ih, &jh).unwrap())).unwrap();
        }
    }
    c
}

pub fn naive_quasi_sum<S: Semiring>(a: &Hypermatrix<S>, b: &Hypermatrix<S>) -> Hypermatrix<S> {
    let (m, n) = (a.dim(), b.dim());
    let (p, q) = (a.out_rank(), a.in_rank());
    if p + q == 0 {
        return Hypermatrix::scalar(m + n, a.as_scalar().unwrap().add(b.as_scalar().unwrap())).unwrap();
    }
    let mut c = Hypermatrix::zeros(m + n, p, q).unwrap();
    for i in tuples(m + n, p) {
        for j in tuples(m + n, q) {
            let all = cat(&i, &j);
            if all.iter().all(|&d| d <= m) {
                c.set(&i, &j, a.get(&i, &j).unwrap().clone()).unwrap();
            } else if all.iter().all(|&d| d > m) {
                let sh = |v: &[usize]| v.iter().map(|d| d - m).collect::<Vec<_>>();
                c.set(&i, &j, b.get(&sh(&i), &sh(&j)).unwrap().clone()).unwrap();
            }
        }
    }
    c
}

/// A random hypermatrix with small entries and some zeros.
pub fn random_hm<S: Semiring, R: Rng>(rng: &mut R, n: usize, p: usize, q: usize) -> Hypermatrix<S> {
    let mut h = Hypermatrix::zeros(n, p, q).unwrap();
    for i in tuples(n, p) {
        for j in tuples(n, q) {
            let v = if rng.gen_bool(0.3) { S::zero() } else { S::random(rng) };
            h.set(&i, &j, v).unwrap();
        }
    }
    h
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// `λ ρ(w_1) .. ρ(w_k) γ` with `rho[letter][from][to]`.
pub fn row_vector_behavior<S: Semiring>(lambda: &[S], rho: &[Vec<Vec<S>>], gamma: &[S], word: &[usize]) -> S {
    let mut row = lambda.to_vec();
    for &a in word {
        let m = &rho[a];
        row = (0..row.len())
            .map(|to| (0..row.len()).fold(S::zero(), |acc, from| acc.add(&row[from].mul(&m[from][to]))))
            .collect();
    }
    row.iter().zip(gamma).fold(S::zero(), |acc, (x, g)| acc.add(&x.mul(g)))
}

/// A ranked tree over named letters.
#[derive(Debug, Clone)]
pub struct RefTree {
    pub letter: String,
    pub children: Vec<RefTree>,
}

/// Bottom-up run set of a nondeterministic tree automaton given as a table
/// `(letter, child states) -> target states`.
pub fn run_states(table: &BTreeMap<(String, Vec<usize>), BTreeSet<usize>>, t: &RefTree) -> BTreeSet<usize> {
    let kids: Vec<BTreeSet<usize>> = t.children.iter().map(|c| run_states(table, c)).collect();
    let mut out = BTreeSet::new();
    let mut choice = vec![0usize; kids.len()];
    let lists: Vec<Vec<usize>> = kids.iter().map(|s| s.iter().copied().collect()).collect();
    if lists.iter().any(|l| l.is_empty()) {
        return out;
    }
    loop {
        let picked: Vec<usize> = choice.iter().zip(&lists).map(|(&c, l)| l[c]).collect();
        if let Some(to) = table.get(&(t.letter.clone(), picked)) {
            out.extend(to.iter().copied());
        }
        let mut k = 0;
        while k < choice.len() {
            choice[k] += 1;
            if choice[k] < lists[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
    }
    out
}

/// A complete DFA over letters `1..=n`: `next[state][letter - 1]`, start 0.
#[derive(Debug, Clone)]
pub struct RefDfa {
    pub next: Vec<Vec<usize>>,
    pub finals: Vec<usize>,
}

impl RefDfa {
    pub fn random<R: Rng>(rng: &mut R, states: usize, n: usize) -> Self {
        let next = (0..states).map(|_| (0..n).map(|_| rng.gen_range(0..states)).collect()).collect();
        let finals = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
        RefDfa { next, finals }
    }

    pub fn accepts(&self, w: &[usize]) -> bool {
        let end = w.iter().fold(0, |s, &a| self.next[s][a - 1]);
        self.finals.contains(&end)
    }
}

type C4 = [[ComplexF64; 4]; 4];

fn mat_mul(a: &C4, b: &C4) -> C4 {
    let mut c = [[ComplexF64::zero(); 4]; 4];
    for (i, row) in c.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..4).fold(ComplexF64::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])));
        }
    }
    c
}

/// `(H ⊗ 1)·cV·cV·(H ⊗ 1)` as a 4x4 product, rows and columns `2·first + second`.
pub fn cnot_by_matrix_product() -> C4 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let h = |a: usize, c: usize| if a == 1 && c == 1 { -s } else { s };
    let mut hi = [[ComplexF64::zero(); 4]; 4];
    let mut v = [[ComplexF64::zero(); 4]; 4];
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if b == d {
                        hi[2 * a + b][2 * c + d] = ComplexF64::new(h(a, c), 0.0);
                    }
                }
            }
        }
    }
    for (k, row) in v.iter_mut().enumerate() {
        row[k] = if k == 3 { ComplexF64::i() } else { ComplexF64::one() };
    }
    mat_mul(&mat_mul(&hi, &v), &mat_mul(&v, &hi))
}
