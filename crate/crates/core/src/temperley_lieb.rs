//! Temperley-Lieb diagrams from cups and caps, the two-dimensional standard
//! representation over `Q(d)`, trace closures and the trace experiment.
//!
//! `cup` is a `(2,0)` chip (two outputs, opening upward), `cap` a `(0,2)`
//! chip. `U_i = |^{i-1} ↔ (cup ↕ cap) ↔ |^{n-i-1}`.

use std::fmt;

use serde_json::{json, Value};

use crate::circuit::{ChipDecl, Node, Signature, Sink, Source, Term};
use crate::error::{Error, Result};
use crate::hypermat::Hypermatrix;
use crate::represent::Representation;
use crate::semiring::{RationalFunction, Semiring};

pub const CUP: &str = "cup";
pub const CAP: &str = "cap";

pub fn signature() -> Signature {
    Signature::new([ChipDecl::new(CUP, 2, 0), ChipDecl::new(CAP, 0, 2)]).expect("distinct names")
}

pub fn cup() -> Term {
    Term::chip(CUP, 2, 0)
}

pub fn cap() -> Term {
    Term::chip(CAP, 0, 2)
}

/// `(cap ↔ |) ↕ (| ↔ cup)`.
pub fn snake_left() -> Term {
    cap().hcomp(&Term::wire()).vcomp(&Term::wire().hcomp(&cup())).expect("(1,3) on (3,1)")
}

/// `(| ↔ cap) ↕ (cup ↔ |)`.
pub fn snake_right() -> Term {
    Term::wire().hcomp(&cap()).vcomp(&cup().hcomp(&Term::wire())).expect("(1,3) on (3,1)")
}

/// `cap ↕ cup`, a closed loop.
pub fn loop_term() -> Term {
    cap().vcomp(&cup()).expect("(0,2) on (2,0)")
}

/// `U_i` on `n` strands, `1 <= i < n`.
pub fn u_term(n: usize, i: usize) -> Result<Term> {
    if i == 0 || i >= n {
        return Err(Error::Index(format!("generator U_{i} needs 1 <= i < n = {n}")));
    }
    let middle = cup().vcomp(&cap()).expect("(2,0) on (0,2)");
    Ok(Term::wires(i - 1).hcomp(&middle).hcomp(&Term::wires(n - i - 1)))
}

/// `U_{w_1} ↕ U_{w_2} ↕ ..`, the first generator on top; the empty word
/// gives `|^n`.
pub fn u_word_term(n: usize, word: &[usize]) -> Result<Term> {
    let parts = word.iter().map(|&i| u_term(n, i)).collect::<Result<Vec<_>>>()?;
    if parts.is_empty() {
        return Ok(Term::wires(n));
    }
    Term::vstack(&parts)
}

/// The dimension-2 representation: `cap ↦ [2-d, 0, d-2, 1]` on inputs
/// `11, 12, 21, 22` and `cup ↦ [1/(2-d), 0, 1, 1]` on outputs.
pub fn standard_rep() -> Representation<RationalFunction> {
    let d = RationalFunction::d();
    let two = RationalFunction::from_int(2);
    let two_minus_d = two.sub(&d);
    let cap_entries = vec![two_minus_d.clone(), RationalFunction::zero(), d.sub(&two), RationalFunction::one()];
    let cup_entries = vec![
        two_minus_d.inv().expect("2 - d is not the zero polynomial"),
        RationalFunction::zero(),
        RationalFunction::one(),
        RationalFunction::one(),
    ];
    Representation::for_signature(
        &signature(),
        2,
        [
            (CAP.to_string(), Hypermatrix::from_entries(2, 0, 2, cap_entries).expect("1x4")),
            (CUP.to_string(), Hypermatrix::from_entries(2, 2, 0, cup_entries).expect("4x1")),
        ],
    )
    .expect("shapes match")
}

/// Checks both snake identities and returns the loop value `d`.
pub fn check_relations<S: Semiring>(mu: &Representation<S>) -> Result<S> {
    let id = Hypermatrix::identity(mu.dim(), 1)?;
    for (name, t) in [("left snake", snake_left()), ("right snake", snake_right())] {
        if mu.eval(&t)? != id {
            return Err(Error::Relation(format!("{name} does not evaluate to the identity")));
        }
    }
    Ok(mu.eval(&loop_term())?.as_scalar().expect("closed").clone())
}

/// A crossingless perfect matching between `top` upper and `bottom` lower
/// points, plus the number of closed loops removed. Points `0..top` are the
/// upper ones left to right, `top..top+bottom` the lower ones left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TlDiagram {
    top: usize,
    bottom: usize,
    matching: Vec<usize>,
    loops: usize,
}

impl TlDiagram {
    pub fn new(top: usize, bottom: usize, matching: Vec<usize>, loops: usize) -> Result<Self> {
        let d = TlDiagram { top, bottom, matching, loops };
        let size = top + bottom;
        if d.matching.len() != size || size % 2 == 1 {
            return Err(Error::Shape(format!("a matching on {size} points needs {size} even partners")));
        }
        for (p, &q) in d.matching.iter().enumerate() {
            if q >= size || q == p || d.matching[q] != p {
                return Err(Error::Invalid(format!("point {p} is not matched consistently")));
            }
        }
        if !d.is_planar() {
            return Err(Error::Invalid("matching has crossings".into()));
        }
        Ok(d)
    }

    pub fn identity(n: usize) -> Self {
        let matching = (0..n).map(|p| p + n).chain(0..n).collect();
        TlDiagram { top: n, bottom: n, matching, loops: 0 }
    }

    pub fn cup() -> Self {
        TlDiagram { top: 2, bottom: 0, matching: vec![1, 0], loops: 0 }
    }

    pub fn cap() -> Self {
        TlDiagram { top: 0, bottom: 2, matching: vec![1, 0], loops: 0 }
    }

    pub fn u_generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::Index(format!("generator U_{i} needs 1 <= i < n = {n}")));
        }
        let mut d = TlDiagram::identity(n);
        let (a, b) = (i - 1, i);
        d.matching[a] = b;
        d.matching[b] = a;
        d.matching[n + a] = n + b;
        d.matching[n + b] = n + a;
        Ok(d)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    pub fn partner(&self, p: usize) -> usize {
        self.matching[p]
    }

    /// The same matching with no loops.
    pub fn without_loops(&self) -> Self {
        TlDiagram { loops: 0, ..self.clone() }
    }

    fn boundary_position(&self, p: usize) -> usize {
        if p < self.top {
            p
        } else {
            self.top + (self.bottom - 1 - (p - self.top))
        }
    }

    /// Non-crossing when read around the boundary of the rectangle.
    pub fn is_planar(&self) -> bool {
        let size = self.top + self.bottom;
        let mut order = vec![0; size];
        for p in 0..size {
            order[self.boundary_position(p)] = p;
        }
        let mut stack = Vec::new();
        for &p in &order {
            let q = self.matching[p];
            if stack.last() == Some(&q) {
                stack.pop();
            } else {
                stack.push(p);
            }
        }
        stack.is_empty()
    }

    /// `self` stacked on top of `below`.
    pub fn compose(&self, below: &TlDiagram) -> Result<TlDiagram> {
        if self.bottom != below.top {
            return Err(Error::Shape(format!("cannot stack {} lower points on {} upper points", self.bottom, below.top)));
        }
        let k = self.bottom;
        let (top, bottom) = (self.top, below.bottom);
        let mut matching = vec![usize::MAX; top + bottom];
        let mut seen = vec![false; k];
        // a point is (upper diagram?, index within that diagram)
        let exit = |upper: bool, q: usize| -> Option<usize> {
            if upper && q < self.top {
                Some(q)
            } else if !upper && q >= below.top {
                Some(top + q - below.top)
            } else {
                None
            }
        };
        for p in 0..top + bottom {
            if matching[p] != usize::MAX {
                continue;
            }
            let (mut upper, mut at) = if p < top { (true, p) } else { (false, below.top + p - top) };
            let end = loop {
                let q = if upper { self.matching[at] } else { below.matching[at] };
                if let Some(e) = exit(upper, q) {
                    break e;
                }
                let mid = if upper { q - self.top } else { q };
                seen[mid] = true;
                if upper {
                    upper = false;
                    at = mid;
                } else {
                    upper = true;
                    at = self.top + mid;
                }
            };
            matching[p] = end;
            matching[end] = p;
        }
        let mut loops = self.loops + below.loops;
        for start in 0..k {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut mid = start;
            loop {
                seen[mid] = true;
                let down = below.matching[mid];
                seen[down] = true;
                let up = self.matching[self.top + down] - self.top;
                if up == start {
                    break;
                }
                mid = up;
            }
        }
        Ok(TlDiagram { top, bottom, matching, loops })
    }

    /// `self` to the left of `right`.
    pub fn tensor(&self, right: &TlDiagram) -> TlDiagram {
        let top = self.top + right.top;
        let bottom = self.bottom + right.bottom;
        let map_left = |p: usize| if p < self.top { p } else { top + p - self.top };
        let map_right = |p: usize| if p < right.top { self.top + p } else { top + self.bottom + p - right.top };
        let mut matching = vec![0; top + bottom];
        for (p, &q) in self.matching.iter().enumerate() {
            matching[map_left(p)] = map_left(q);
        }
        for (p, &q) in right.matching.iter().enumerate() {
            matching[map_right(p)] = map_right(q);
        }
        TlDiagram { top, bottom, matching, loops: self.loops + right.loops }
    }

    /// Closes upper point `i` to lower point `i` and returns the loops of
    /// the closure as `(essential, contractible)`: a loop is essential when it
    /// runs once around the annulus, i.e. uses an odd number of closing arcs.
    /// Loops already removed count as contractible.
    pub fn annular_closure(&self) -> Result<(usize, usize)> {
        if self.top != self.bottom {
            return Err(Error::Arity(format!("closure of a ({},{}) diagram", self.top, self.bottom)));
        }
        let n = self.top;
        let mut seen = vec![false; 2 * n];
        let (mut essential, mut contractible) = (0, self.loops);
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut arcs = 0;
            let mut p = start;
            loop {
                seen[p] = true;
                let q = self.matching[p];
                seen[q] = true;
                // closing arc from q to its partner on the other side
                let r = if q < n { q + n } else { q - n };
                arcs += 1;
                if r == start {
                    break;
                }
                p = r;
            }
            if arcs % 2 == 1 {
                essential += 1;
            } else {
                contractible += 1;
            }
        }
        Ok((essential, contractible))
    }
}

impl fmt::Display for TlDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |p: usize| if p < self.top { format!("t{}", p + 1) } else { format!("b{}", p - self.top + 1) };
        let pairs: Vec<String> = (0..self.matching.len())
            .filter(|&p| p < self.matching[p])
            .map(|p| format!("{}-{}", name(p), name(self.matching[p])))
            .collect();
        write!(f, "[{}] loops={}", pairs.join(" "), self.loops)
    }
}

/// The diagram of a term over `{cup, cap}` by strand tracing.
pub fn reduce_term(t: &Term) -> Result<TlDiagram> {
    match t.node() {
        Node::Empty => Ok(TlDiagram::identity(0)),
        Node::Wire => Ok(TlDiagram::identity(1)),
        Node::Chip(c) if c.name == CUP && (c.out, c.inp) == (2, 0) => Ok(TlDiagram::cup()),
        Node::Chip(c) if c.name == CAP && (c.out, c.inp) == (0, 2) => Ok(TlDiagram::cap()),
        Node::Chip(c) => Err(Error::UnknownChip(c.name.clone())),
        Node::HComp(a, b) => Ok(reduce_term(a)?.tensor(&reduce_term(b)?)),
        Node::VComp(a, b) => reduce_term(a)?.compose(&reduce_term(b)?),
    }
}

/// Component counts of the trace closure of an `(n,n)` circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleCounts {
    /// Components containing at least one chip.
    pub ntriv: usize,
    /// Components made of wires only.
    pub triv: usize,
}

/// Closes input `i` to output `i` and counts the connected components.
pub fn cycle_close(t: &Term) -> Result<CycleCounts> {
    let (m, n) = t.arity();
    if m != n {
        return Err(Error::Arity(format!("trace closure of a ({m},{n}) circuit")));
    }
    let g = t.to_port_graph();
    let v = g.vertices.len();
    // nodes: chips 0..v, closure slots v..v+n
    let mut parent: Vec<usize> = (0..v + n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in &g.edges {
        let a = match e.src {
            Source::Input(j) => v + j,
            Source::Port(c, _) => c,
        };
        let b = match e.snk {
            Sink::Output(i) => v + i,
            Sink::Port(c, _) => c,
        };
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut has_chip = vec![false; v + n];
    let mut is_root = vec![false; v + n];
    for x in 0..v + n {
        let r = find(&mut parent, x);
        is_root[r] = true;
        if x < v {
            has_chip[r] = true;
        }
    }
    let ntriv = (0..v + n).filter(|&r| is_root[r] && has_chip[r]).count();
    let triv = (0..v + n).filter(|&r| is_root[r] && !has_chip[r]).count();
    Ok(CycleCounts { ntriv, triv })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureCase<S> {
    pub lhs: S,
    pub rhs: S,
    pub equal: bool,
    pub counts: CycleCounts,
}

/// `tr μ(t)` against `N^triv · d^ntriv`, after checking the relations of `μ`.
pub fn conjecture_check<S: Semiring>(t: &Term, mu: &Representation<S>) -> Result<ConjectureCase<S>> {
    let d = check_relations(mu)?;
    let counts = cycle_close(t)?;
    let lhs = mu.eval(t)?.trace()?;
    let rhs = S::from_u64(mu.dim() as u64).pow(counts.triv as u64).mul(&d.pow(counts.ntriv as u64));
    Ok(ConjectureCase { equal: lhs == rhs, lhs, rhs, counts })
}

/// Laurent polynomial in `s = 2 - d`; the standard representation has all
/// its entries in `Z[s, 1/s]`, which keeps the experiment free of gcds.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Laurent {
    low: i32,
    coeffs: Vec<i64>,
}

impl Laurent {
    fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    fn monomial(c: i64, e: i32) -> Self {
        Laurent { low: e, coeffs: vec![c] }.trimmed()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            return Laurent::zero();
        }
        self.coeffs.drain(..lead);
        self.low += lead as i32;
        self
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = (self.low + self.coeffs.len() as i32).max(rhs.low + rhs.coeffs.len() as i32);
        let mut coeffs = vec![0i64; (high - low) as usize];
        for (x, off) in [(self, self.low - low), (rhs, rhs.low - low)] {
            for (k, c) in x.coeffs.iter().enumerate() {
                let slot = &mut coeffs[off as usize + k];
                *slot = slot.checked_add(*c).expect("coefficient overflow");
            }
        }
        Laurent { low, coeffs }.trimmed()
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let p = a.checked_mul(*b).expect("coefficient overflow");
                coeffs[i + j] = coeffs[i + j].checked_add(p).expect("coefficient overflow");
            }
        }
        Laurent { low: self.low + rhs.low, coeffs }.trimmed()
    }

    fn pow(&self, e: usize) -> Self {
        (0..e).fold(Laurent::monomial(1, 0), |acc, _| acc.mul(self))
    }

    fn to_rational_function(&self) -> RationalFunction {
        let s = RationalFunction::from_int(2).sub(&RationalFunction::d());
        let s_inv = s.inv().expect("2 - d is invertible");
        self.coeffs.iter().enumerate().fold(RationalFunction::zero(), |acc, (k, &c)| {
            let e = self.low + k as i32;
            let base = if e >= 0 { s.pow(e as u64) } else { s_inv.pow((-e) as u64) };
            acc.add(&RationalFunction::from_int(c).mul(&base))
        })
    }
}

/// One term of the trace experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub n: usize,
    pub word: Vec<usize>,
    pub counts: CycleCounts,
    pub lhs: RationalFunction,
    pub rhs: RationalFunction,
    pub equal: bool,
    /// Loops of the closure running around the annulus, and the others.
    pub essential: usize,
    pub contractible: usize,
    /// Whether `tr = N^essential · d^contractible`.
    pub annular_equal: bool,
}

impl ExperimentRow {
    pub fn term(&self) -> Term {
        u_word_term(self.n, &self.word).expect("valid word")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "word": self.word,
            "term": self.term().to_json(),
            "triv": self.counts.triv,
            "ntriv": self.counts.ntriv,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "equal": self.equal,
            "essential": self.essential,
            "contractible": self.contractible,
            "annular_equal": self.annular_equal,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub rows: Vec<ExperimentRow>,
}

impl ExperimentReport {
    pub fn total(&self) -> usize {
        self.rows.len()
    }

    pub fn agreements(&self) -> usize {
        self.rows.iter().filter(|r| r.equal).count()
    }

    pub fn agreement_rate(&self) -> f64 {
        if self.rows.is_empty() {
            1.0
        } else {
            self.agreements() as f64 / self.total() as f64
        }
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &ExperimentRow> {
        self.rows.iter().filter(|r| !r.equal)
    }

    /// Fewest generators first, then fewest strands.
    pub fn shortest_counterexample(&self) -> Option<&ExperimentRow> {
        self.counterexamples().min_by_key(|r| (r.word.len(), r.n, r.word.clone()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "total": self.total(),
            "agreements": self.agreements(),
            "agreement_rate": self.agreement_rate(),
            "annular_agreements": self.rows.iter().filter(|r| r.annular_equal).count(),
            "shortest_counterexample": self.shortest_counterexample().map(ExperimentRow::to_json),
            "rows": self.rows.iter().map(ExperimentRow::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Dense `2^n × 2^n` matrix over `Z[s, 1/s]`.
struct LaurentMatrix {
    n: usize,
    entries: Vec<Laurent>,
}

impl LaurentMatrix {
    fn identity(n: usize) -> Self {
        let size = 1 << n;
        let entries = (0..size * size).map(|k| if k / size == k % size { Laurent::monomial(1, 0) } else { Laurent::zero() }).collect();
        LaurentMatrix { n, entries }
    }

    /// `self · μ(U_i)`: on wires `i, i+1` the generator is `cup` above `cap`,
    /// the rank-one matrix `u c` with `u = [1/s, 0, 1, 1]`, `c = [s, 0, -s, 1]`.
    fn times_generator(&self, i: usize) -> Self {
        let size = 1 << self.n;
        let hi = self.n - i; // bit of wire i
        let lo = hi - 1; // bit of wire i + 1
        let u = [Laurent::monomial(1, -1), Laurent::zero(), Laurent::monomial(1, 0), Laurent::monomial(1, 0)];
        let c = [Laurent::monomial(1, 1), Laurent::zero(), Laurent::monomial(-1, 1), Laurent::monomial(1, 0)];
        let mut out = vec![Laurent::zero(); size * size];
        let pair_col = |base: usize, ab: usize| base | ((ab >> 1) << hi) | ((ab & 1) << lo);
        for r in 0..size {
            for base in 0..size {
                if base & ((1 << hi) | (1 << lo)) != 0 {
                    continue;
                }
                let mut s = Laurent::zero();
                for (ab, uk) in u.iter().enumerate() {
                    let e = &self.entries[r * size + pair_col(base, ab)];
                    if !uk.is_zero() && !e.is_zero() {
                        s = s.add(&e.mul(uk));
                    }
                }
                if s.is_zero() {
                    continue;
                }
                for (ab, ck) in c.iter().enumerate() {
                    if !ck.is_zero() {
                        out[r * size + pair_col(base, ab)] = s.mul(ck);
                    }
                }
            }
        }
        LaurentMatrix { n: self.n, entries: out }
    }

    fn trace(&self) -> Laurent {
        let size = 1 << self.n;
        (0..size).fold(Laurent::zero(), |acc, k| acc.add(&self.entries[k * size + k]))
    }
}

/// Every `U`-word with at most `max_gens` generators on `n = 2..=max_n`
/// strands, under the standard representation (`N = 2`).
pub fn conjecture_experiment(max_gens: usize, max_n: usize) -> Result<ExperimentReport> {
    let mut rows = Vec::new();
    let d = Laurent::monomial(2, 0).add(&Laurent::monomial(-1, 1));
    let two = Laurent::monomial(2, 0);
    for n in 2..=max_n {
        let mut word = Vec::new();
        let mut visit = |word: &[usize], m: &LaurentMatrix| -> Result<()> {
            let term = u_word_term(n, word)?;
            let counts = cycle_close(&term)?;
            let diagram = reduce_term(&term)?;
            let (essential, contractible) = diagram.annular_closure()?;
            let lhs = m.trace();
            let rhs = two.pow(counts.triv).mul(&d.pow(counts.ntriv));
            let annular = two.pow(essential).mul(&d.pow(contractible));
            rows.push(ExperimentRow {
                n,
                word: word.to_vec(),
                counts,
                equal: lhs == rhs,
                annular_equal: lhs == annular,
                lhs: lhs.to_rational_function(),
                rhs: rhs.to_rational_function(),
                essential,
                contractible,
            });
            Ok(())
        };
        fn dfs(
            n: usize,
            depth: usize,
            word: &mut Vec<usize>,
            m: &LaurentMatrix,
            visit: &mut dyn FnMut(&[usize], &LaurentMatrix) -> Result<()>,
        ) -> Result<()> {
            visit(word, m)?;
            if depth == 0 {
                return Ok(());
            }
            for i in 1..n {
                word.push(i);
                dfs(n, depth - 1, word, &m.times_generator(i), visit)?;
                word.pop();
            }
            Ok(())
        }
        dfs(n, max_gens, &mut word, &LaurentMatrix::identity(n), &mut visit)?;
    }
    Ok(ExperimentReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> RationalFunction {
        RationalFunction::d()
    }

    #[test]
    fn snakes_and_loop() {
        let mu = standard_rep();
        assert_eq!(check_relations(&mu).unwrap(), d());
        assert_eq!(reduce_term(&snake_left()).unwrap(), TlDiagram::identity(1));
        assert_eq!(reduce_term(&snake_right()).unwrap(), TlDiagram::identity(1));
        let l = reduce_term(&loop_term()).unwrap();
        assert_eq!((l.top(), l.bottom(), l.loops()), (0, 0, 1));
    }

    #[test]
    fn generator_relations() {
        for n in 2..=6 {
            for i in 1..n {
                let u = TlDiagram::u_generator(n, i).unwrap();
                assert_eq!(reduce_term(&u_term(n, i).unwrap()).unwrap(), u);
                let sq = u.compose(&u).unwrap();
                assert_eq!((sq.without_loops(), sq.loops()), (u.clone(), 1));
                if i + 1 < n {
                    let v = TlDiagram::u_generator(n, i + 1).unwrap();
                    assert_eq!(u.compose(&v).unwrap().compose(&u).unwrap(), u);
                    assert_eq!(v.compose(&u).unwrap().compose(&v).unwrap(), v);
                }
                for j in i + 2..n {
                    let v = TlDiagram::u_generator(n, j).unwrap();
                    assert_eq!(u.compose(&v).unwrap(), v.compose(&u).unwrap());
                }
            }
        }
    }

    #[test]
    fn quadratic_relation_in_the_representation() {
        let mu = standard_rep();
        let u = mu.eval(&u_term(3, 1).unwrap()).unwrap();
        let uu = mu.eval(&u_word_term(3, &[1, 1]).unwrap()).unwrap();
        assert_eq!(uu, u.scale(&d()));
    }

    #[test]
    fn planarity() {
        assert!(TlDiagram::new(2, 2, vec![3, 2, 1, 0], 0).is_err());
        assert!(TlDiagram::new(2, 2, vec![2, 3, 0, 1], 0).is_ok());
        assert!(TlDiagram::new(4, 0, vec![3, 2, 1, 0], 0).is_ok());
        assert!(TlDiagram::new(4, 0, vec![2, 3, 0, 1], 0).is_err());
    }

    #[test]
    fn closure_counts() {
        assert_eq!(cycle_close(&Term::wires(3)).unwrap(), CycleCounts { ntriv: 0, triv: 3 });
        assert_eq!(cycle_close(&u_term(4, 2).unwrap()).unwrap(), CycleCounts { ntriv: 1, triv: 2 });
        // cup in the first two upper slots, a cap on lower slots 3 and 4,
        // the other strands shifted right by two
        let top = cup().hcomp(&Term::wires(4));
        let bottom = Term::wires(2).hcomp(&cap()).hcomp(&Term::wires(2));
        let t = top.vcomp(&bottom).unwrap();
        assert_eq!(t.arity(), (6, 6));
        assert_eq!(cycle_close(&t).unwrap(), CycleCounts { ntriv: 1, triv: 2 });
        let mu = standard_rep();
        let case = conjecture_check(&t, &mu).unwrap();
        assert!(case.equal);
    }

    #[test]
    fn traces() {
        let mu = standard_rep();
        for n in 1..=4 {
            let t = mu.eval(&Term::wires(n)).unwrap().trace().unwrap();
            assert_eq!(t, RationalFunction::from_int(1 << n));
        }
        for n in 2..=4 {
            for i in 1..n {
                let t = mu.eval(&u_term(n, i).unwrap()).unwrap().trace().unwrap();
                assert_eq!(t, RationalFunction::from_int(1 << (n - 2)).mul(&d()));
            }
        }
    }

    #[test]
    fn experiment_matches_direct_evaluation() {
        let mu = standard_rep();
        let report = conjecture_experiment(3, 3).unwrap();
        for row in &report.rows {
            let case = conjecture_check(&row.term(), &mu).unwrap();
            assert_eq!(case.lhs, row.lhs, "{:?}", row.word);
            assert_eq!(case.rhs, row.rhs, "{:?}", row.word);
        }
    }

    #[test]
    fn foreign_chip() {
        assert_eq!(reduce_term(&Term::chip("x", 1, 1)), Err(Error::UnknownChip("x".into())));
    }
}
