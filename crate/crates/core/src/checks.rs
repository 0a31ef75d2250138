//! Seeded invariant suites over the whole library, reported per law.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::automata::word::{all_words, random_dfa};
use crate::automata::{bossut, lang_odot, word_odot, Tree, TreeAutomaton, WordAutomaton};
use crate::circuit::{random_circuit, ChipDecl, Signature, Term};
use crate::error::{Error, Result};
use crate::hypermat::{Hypermatrix, MultiIndex};
use crate::paths::path_sum_table;
use crate::quantum_gates as qg;
use crate::semiring::{Boolean, ComplexF64, Natural, Rational, RationalFunction, Semiring};
use crate::temperley_lieb as tl;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    ProAxioms,
    ModPro,
    Kronecker,
    QuasiSum,
    PathsOracle,
    Automata,
    TemperleyLieb,
    Quantum,
    All,
}

impl Suite {
    pub const EVERY: [Suite; 8] = [
        Suite::ProAxioms,
        Suite::ModPro,
        Suite::Kronecker,
        Suite::QuasiSum,
        Suite::PathsOracle,
        Suite::Automata,
        Suite::TemperleyLieb,
        Suite::Quantum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ProAxioms => "pro-axioms",
            Suite::ModPro => "modpro",
            Suite::Kronecker => "kronecker",
            Suite::QuasiSum => "quasisum",
            Suite::PathsOracle => "paths-oracle",
            Suite::Automata => "automata",
            Suite::TemperleyLieb => "tl",
            Suite::Quantum => "quantum",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EVERY
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckConfig {
    pub seed: u64,
    pub tolerance: f64,
    /// Random instances per law.
    pub cases: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { seed: 0x5eed, tolerance: crate::semiring::DEFAULT_TOLERANCE, cases: 200 }
    }
}

/// The result of one law: how many instances ran and the first failure.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub suite: Suite,
    pub law: String,
    pub cases: usize,
    pub failures: usize,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "law": self.law,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed(),
            "witness": self.witness,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub seed: u64,
    pub outcomes: Vec<Outcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(Outcome::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "passed": self.passed(),
            "outcomes": self.outcomes.iter().map(Outcome::to_json).collect::<Vec<_>>(),
        })
    }
}

struct Tally<'a> {
    suite: Suite,
    out: &'a mut Vec<Outcome>,
}

impl Tally<'_> {
    /// Runs `cases` instances of a law; `case` returns `Ok(None)` on success
    /// and `Ok(Some(witness))` on failure.
    fn law(&mut self, law: impl Into<String>, cases: usize, mut case: impl FnMut(usize) -> Result<Option<String>>) -> Result<()> {
        let mut failures = 0;
        let mut witness = None;
        for k in 0..cases {
            if let Some(w) = case(k)? {
                failures += 1;
                witness.get_or_insert(w);
            }
        }
        self.out.push(Outcome { suite: self.suite, law: law.into(), cases, failures, witness });
        Ok(())
    }

    fn single(&mut self, law: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        let w = (!ok).then(witness);
        self.out.push(Outcome { suite: self.suite, law: law.into(), cases: 1, failures: usize::from(!ok), witness: w });
    }
}

fn differ<S: Semiring>(lhs: &Hypermatrix<S>, rhs: &Hypermatrix<S>) -> Option<String> {
    if lhs.shape() != rhs.shape() {
        return Some(format!("shapes {:?} and {:?}", lhs.shape(), rhs.shape()));
    }
    lhs.first_difference(rhs).map(|(i, j)| format!("entry {i:?}/{j:?}: {} vs {}", lhs.get(&i, &j).unwrap(), rhs.get(&i, &j).unwrap()))
}

fn rand_hm<S: Semiring>(rng: &mut ChaCha8Rng, dim: usize, p: usize, q: usize) -> Hypermatrix<S> {
    Hypermatrix::random(dim, p, q, rng).expect("positive dimension")
}

pub fn run(suite: Suite, cfg: &CheckConfig) -> Result<Report> {
    let mut outcomes = Vec::new();
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EVERY.to_vec() } else { vec![suite] };
    for s in suites {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (s as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut tally = Tally { suite: s, out: &mut outcomes };
        match s {
            Suite::ProAxioms => {
                pro_axioms::<Boolean>(&mut tally, &mut rng, cfg.cases)?;
                pro_axioms::<Natural>(&mut tally, &mut rng, cfg.cases)?;
                pro_axioms::<Rational>(&mut tally, &mut rng, cfg.cases)?;
            }
            Suite::ModPro => {
                modpro::<Boolean>(&mut tally, &mut rng, cfg.cases)?;
                modpro::<Natural>(&mut tally, &mut rng, cfg.cases)?;
                modpro::<Rational>(&mut tally, &mut rng, cfg.cases)?;
                basis_identities(&mut tally)?;
            }
            Suite::Kronecker => kronecker::<Rational>(&mut tally, &mut rng, cfg.cases)?,
            Suite::QuasiSum => quasisum::<Natural>(&mut tally, &mut rng, cfg.cases)?,
            Suite::PathsOracle => paths_oracle(&mut tally, &mut rng, cfg.cases.min(60))?,
            Suite::Automata => automata(&mut tally, &mut rng)?,
            Suite::TemperleyLieb => temperley_lieb(&mut tally)?,
            Suite::Quantum => quantum(&mut tally, cfg.tolerance)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(Report { seed: cfg.seed, outcomes })
}

fn pro_axioms<S: Semiring>(t: &mut Tally, rng: &mut ChaCha8Rng, cases: usize) -> Result<()> {
    let tag = S::KIND.name();
    let shapes = |rng: &mut ChaCha8Rng, k: usize| -> (usize, Vec<usize>) {
        (rng.gen_range(1..=3), (0..k).map(|_| rng.gen_range(0..=2)).collect())
    };
    t.law(format!("horizontal associativity [{tag}]"), cases, |_| {
        let (n, r) = shapes(rng, 6);
        let (a, b, c) = (rand_hm::<S>(rng, n, r[0], r[1]), rand_hm(rng, n, r[2], r[3]), rand_hm(rng, n, r[4], r[5]));
        Ok(differ(&a.hcomp(&b)?.hcomp(&c)?, &a.hcomp(&b.hcomp(&c)?)?))
    })?;
    t.law(format!("vertical associativity [{tag}]"), cases, |_| {
        let (n, r) = shapes(rng, 4);
        let (a, b, c) = (rand_hm::<S>(rng, n, r[0], r[1]), rand_hm(rng, n, r[1], r[2]), rand_hm(rng, n, r[2], r[3]));
        Ok(differ(&a.vcomp(&b)?.vcomp(&c)?, &a.vcomp(&b.vcomp(&c)?)?))
    })?;
    t.law(format!("interchange law [{tag}]"), cases, |_| {
        let (n, r) = shapes(rng, 6);
        let (a, b) = (rand_hm::<S>(rng, n, r[0], r[1]), rand_hm(rng, n, r[1], r[2]));
        let (a2, b2) = (rand_hm::<S>(rng, n, r[3], r[4]), rand_hm(rng, n, r[4], r[5]));
        Ok(differ(&a.vcomp(&b)?.hcomp(&a2.vcomp(&b2)?)?, &a.hcomp(&a2)?.vcomp(&b.hcomp(&b2)?)?))
    })?;
    t.law(format!("graded units [{tag}]"), cases, |_| {
        let (n, r) = shapes(rng, 2);
        let a = rand_hm::<S>(rng, n, r[0], r[1]);
        let left = Hypermatrix::identity(n, r[0])?.vcomp(&a)?;
        let right = a.vcomp(&Hypermatrix::identity(n, r[1])?)?;
        Ok(differ(&left, &a).or_else(|| differ(&right, &a)))
    })?;
    t.law(format!("horizontal unit [{tag}]"), cases, |_| {
        let (n, r) = shapes(rng, 2);
        let a = rand_hm::<S>(rng, n, r[0], r[1]);
        let one = Hypermatrix::scalar(n, S::one())?;
        Ok(differ(&one.hcomp(&a)?, &a).or_else(|| differ(&a.hcomp(&one).ok()?, &a)))
    })?;
    t.law(format!("identities juxtapose [{tag}]"), cases, |_| {
        let (n, r) = shapes(rng, 2);
        let lhs = Hypermatrix::<S>::identity(n, r[0])?.hcomp(&Hypermatrix::identity(n, r[1])?)?;
        Ok(differ(&lhs, &Hypermatrix::identity(n, r[0] + r[1])?))
    })?;
    t.law(format!("Eckmann-Hilton [{tag}]"), cases, |_| {
        let (n, r) = shapes(rng, 2);
        let a = rand_hm::<S>(rng, n, 0, r[0]);
        let b = rand_hm::<S>(rng, n, r[1], 0);
        let h = a.hcomp(&b)?;
        let mut w = differ(&h, &b.vcomp(&a)?).or_else(|| differ(&h, &b.hcomp(&a).ok()?));
        let (x, y) = (rand_hm::<S>(rng, n, 0, 0), rand_hm::<S>(rng, n, 0, 0));
        w = w.or_else(|| differ(&x.vcomp(&y).ok()?, &y.vcomp(&x).ok()?));
        Ok(w)
    })
}

fn modpro<S: Semiring>(t: &mut Tally, rng: &mut ChaCha8Rng, cases: usize) -> Result<()> {
    let tag = S::KIND.name();
    let draw = |rng: &mut ChaCha8Rng| -> (usize, [usize; 3]) {
        (rng.gen_range(1..=3), [rng.gen_range(0..=2), rng.gen_range(0..=2), rng.gen_range(0..=2)])
    };
    t.law(format!("distributivity of ↔ [{tag}]"), cases, |_| {
        let (n, [p, q, r]) = draw(rng);
        let (a, a2, b) = (rand_hm::<S>(rng, n, p, q), rand_hm(rng, n, p, q), rand_hm(rng, n, r, p));
        let left = a.add(&a2)?.hcomp(&b)?;
        let right = b.hcomp(&a.add(&a2)?)?;
        Ok(differ(&left, &a.hcomp(&b)?.add(&a2.hcomp(&b)?)?)
            .or_else(|| differ(&right, &b.hcomp(&a).ok()?.add(&b.hcomp(&a2).ok()?).ok()?)))
    })?;
    t.law(format!("distributivity of ↕ [{tag}]"), cases, |_| {
        let (n, [p, q, r]) = draw(rng);
        let (a, a2) = (rand_hm::<S>(rng, n, p, q), rand_hm(rng, n, p, q));
        let (b, b2) = (rand_hm::<S>(rng, n, q, r), rand_hm(rng, n, q, r));
        Ok(differ(&a.add(&a2)?.vcomp(&b)?, &a.vcomp(&b)?.add(&a2.vcomp(&b)?)?)
            .or_else(|| differ(&a.vcomp(&b.add(&b2).ok()?).ok()?, &a.vcomp(&b).ok()?.add(&a.vcomp(&b2).ok()?).ok()?)))
    })?;
    t.law(format!("scalars commute with ↔ and ↕ [{tag}]"), cases, |_| {
        let (n, [p, q, r]) = draw(rng);
        let s = S::random(rng);
        let (a, b) = (rand_hm::<S>(rng, n, p, q), rand_hm(rng, n, q, r));
        let h = a.hcomp(&b)?.scale(&s);
        let v = a.vcomp(&b)?.scale(&s);
        Ok(differ(&h, &a.scale(&s).hcomp(&b)?)
            .or_else(|| differ(&h, &a.hcomp(&b.scale(&s)).ok()?))
            .or_else(|| differ(&v, &a.scale(&s).vcomp(&b).ok()?))
            .or_else(|| differ(&v, &a.vcomp(&b.scale(&s)).ok()?)))
    })?;
    t.law(format!("basis decomposition round trip [{tag}]"), cases, |_| {
        let (n, [p, q, _]) = draw(rng);
        let a = rand_hm::<S>(rng, n, p, q);
        let mut back = Hypermatrix::zeros(n, p, q)?;
        for (c, i, j) in a.decompose() {
            back = back.add(&Hypermatrix::basis(n, p, q, &i, &j)?.scale(&c))?;
        }
        Ok(differ(&back, &a))
    })
}

/// `E ↔ E` and `E ↕ E` on every basis pair with `N <= 2`, ranks `<= 2`.
fn basis_identities(t: &mut Tally) -> Result<()> {
    let mut ehe = (0, None);
    let mut eve = (0, None);
    for n in 1..=2 {
        for (p, q, p2, q2) in ranks4() {
            for (i, j) in pairs(n, p, q) {
                for (i2, j2) in pairs(n, p2, q2) {
                    let e = Hypermatrix::<Natural>::basis(n, p, q, &i, &j)?;
                    let e2 = Hypermatrix::<Natural>::basis(n, p2, q2, &i2, &j2)?;
                    let cat = |a: &[usize], b: &[usize]| [a, b].concat();
                    let want = Hypermatrix::basis(n, p + p2, q + q2, &cat(&i, &i2), &cat(&j, &j2))?;
                    if let Some(w) = differ(&e.hcomp(&e2)?, &want) {
                        ehe.0 += 1;
                        ehe.1.get_or_insert(w);
                    }
                    if q == p2 {
                        let want = if j == i2 { Hypermatrix::basis(n, p, q2, &i, &j2)? } else { Hypermatrix::zeros(n, p, q2)? };
                        if let Some(w) = differ(&e.vcomp(&e2)?, &want) {
                            eve.0 += 1;
                            eve.1.get_or_insert(w);
                        }
                    }
                }
            }
        }
    }
    t.out.push(Outcome { suite: t.suite, law: "E ↔ E is the catenated basis element".into(), cases: 1, failures: ehe.0, witness: ehe.1 });
    t.out.push(Outcome { suite: t.suite, law: "E ↕ E is δ times a basis element".into(), cases: 1, failures: eve.0, witness: eve.1 });
    Ok(())
}

fn ranks4() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..81).map(|k| (k % 3, (k / 3) % 3, (k / 9) % 3, k / 27))
}

fn pairs(n: usize, p: usize, q: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let outs: Vec<Vec<usize>> = MultiIndex::all(n, p).map(|m| m.digits().to_vec()).collect();
    let ins: Vec<Vec<usize>> = MultiIndex::all(n, q).map(|m| m.digits().to_vec()).collect();
    outs.iter().flat_map(|i| ins.iter().map(move |j| (i.clone(), j.clone()))).collect()
}

fn kronecker<S: Semiring>(t: &mut Tally, rng: &mut ChaCha8Rng, cases: usize) -> Result<()> {
    let draw = |rng: &mut ChaCha8Rng| [rng.gen_range(0..=2), rng.gen_range(0..=2), rng.gen_range(0..=2), rng.gen_range(0..=2)];
    t.law("⊙ commutes with ↔", cases, |_| {
        let [p, q, r, s] = draw(rng);
        let (a, b) = (rand_hm::<S>(rng, 2, p, q), rand_hm(rng, 2, r, s));
        let (a2, b2) = (rand_hm::<S>(rng, 2, p, q), rand_hm(rng, 2, r, s));
        Ok(differ(&a.hcomp(&b)?.kronecker(&a2.hcomp(&b2)?)?, &a.kronecker(&a2)?.hcomp(&b.kronecker(&b2)?)?))
    })?;
    t.law("⊙ commutes with ↕", cases, |_| {
        let [p, q, r, _] = draw(rng);
        let (a, b) = (rand_hm::<S>(rng, 2, p, q), rand_hm(rng, 2, q, r));
        let (a2, b2) = (rand_hm::<S>(rng, 2, p, q), rand_hm(rng, 2, q, r));
        Ok(differ(&a.vcomp(&b)?.kronecker(&a2.vcomp(&b2)?)?, &a.kronecker(&a2)?.vcomp(&b.kronecker(&b2)?)?))
    })?;
    t.law("⊙ is bilinear", cases, |_| {
        let [p, q, _, _] = draw(rng);
        let (a, a2, b) = (rand_hm::<S>(rng, 2, p, q), rand_hm(rng, 2, p, q), rand_hm(rng, 2, p, q));
        let s = S::random(rng);
        Ok(differ(&a.add(&a2)?.kronecker(&b)?, &a.kronecker(&b)?.add(&a2.kronecker(&b)?)?)
            .or_else(|| differ(&b.kronecker(&a.add(&a2).ok()?).ok()?, &b.kronecker(&a).ok()?.add(&b.kronecker(&a2).ok()?).ok()?))
            .or_else(|| differ(&a.scale(&s).kronecker(&b).ok()?, &a.kronecker(&b).ok()?.scale(&s))))
    })?;
    t.law("identity ⊙ identity", 1, |_| Ok(differ(&Hypermatrix::<S>::identity(2, 1)?.kronecker(&Hypermatrix::identity(3, 1)?)?, &Hypermatrix::identity(6, 1)?)))
}

fn quasisum<S: Semiring>(t: &mut Tally, rng: &mut ChaCha8Rng, cases: usize) -> Result<()> {
    t.law("⊕̂ commutes with ↕ (inner rank >= 1)", cases, |_| {
        let (m, n) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let (p, q, r) = (rng.gen_range(0..=2), rng.gen_range(1..=2), rng.gen_range(0..=2));
        let (a, b) = (rand_hm::<S>(rng, m, p, q), rand_hm(rng, m, q, r));
        let (a2, b2) = (rand_hm::<S>(rng, n, p, q), rand_hm(rng, n, q, r));
        Ok(differ(&a.quasi_direct_sum(&a2)?.vcomp(&b.quasi_direct_sum(&b2)?)?, &a.vcomp(&b)?.quasi_direct_sum(&a2.vcomp(&b2)?)?))
    })?;
    t.law("⊕̂ is bilinear", cases, |_| {
        let (m, n, p, q) = (rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(0..=2), rng.gen_range(0..=2));
        let (a, b) = (rand_hm::<S>(rng, m, p, q), rand_hm(rng, m, p, q));
        let (a2, b2) = (rand_hm::<S>(rng, n, p, q), rand_hm(rng, n, p, q));
        Ok(differ(&a.add(&b)?.quasi_direct_sum(&a2.add(&b2)?)?, &a.quasi_direct_sum(&a2)?.add(&b.quasi_direct_sum(&b2)?)?))
    })?;
    t.law("I(M) ⊕̂ I(N) = I(M+N)", 9, |k| {
        let (m, n) = (k % 3 + 1, k / 3 + 1);
        Ok(differ(&Hypermatrix::<S>::identity(m, 1)?.quasi_direct_sum(&Hypermatrix::identity(n, 1)?)?, &Hypermatrix::identity(m + n, 1)?))
    })?;
    let i1 = Hypermatrix::<S>::identity(1, 1)?;
    let sum = i1.quasi_direct_sum(&i1)?;
    let lhs = sum.hcomp(&sum)?;
    let pair = i1.hcomp(&i1)?;
    let rhs = pair.quasi_direct_sum(&pair)?;
    let (l, r) = (lhs.get(&[1, 2], &[1, 2])?.clone(), rhs.get(&[1, 2], &[1, 2])?.clone());
    t.single("⊕̂ and ↔ disagree at ([1,2],[1,2])", l.is_one() && r.is_zero(), || format!("{l} vs {r}"));
    Ok(())
}

fn paths_oracle(t: &mut Tally, rng: &mut ChaCha8Rng, cases: usize) -> Result<()> {
    let sig = Signature::new([ChipDecl::new("f", 1, 1), ChipDecl::new("m", 1, 2), ChipDecl::new("d", 2, 1)])?;
    t.law("eval equals the path sum", cases, |_| {
        let n = rng.gen_range(1..=3);
        let chips = rng.gen_range(0..=5);
        let c = random_circuit(&sig, chips, rng);
        let mu = crate::represent::Representation::<Natural>::for_signature(
            &sig,
            n,
            sig.chips().map(|d| (d.name.clone(), rand_hm::<Natural>(rng, n, d.out, d.inp))),
        )?;
        Ok(differ(&mu.eval(&c)?, &path_sum_table(&c, &mu)?).map(|w| format!("{c}: {w}")))
    })
}

fn automata(t: &mut Tally, rng: &mut ChaCha8Rng) -> Result<()> {
    // word automata: 3 states over {a, b}
    let a: WordAutomaton<Natural> = random_word_automaton(rng, 3, &["a", "b"]);
    let (_, mu) = a.word_rep()?;
    let words: Vec<Vec<&str>> = (0..=6).flat_map(|len| all_words(2, len)).map(|w| w.iter().map(|&d| ["a", "b"][d - 1]).collect()).collect();
    t.law("word circuit evaluates to λρ(w)γ", words.len(), |k| {
        let w = &words[k];
        let direct = direct_behavior(&a, w);
        let got = mu.eval(&crate::automata::word_to_circuit(w))?.as_scalar().expect("closed").clone();
        Ok((got != direct).then(|| format!("{w:?}: {got} vs {direct}")))
    })?;
    // tree automata
    let alphabet = [("a", 2), ("b", 0), ("c", 0)];
    let ta = TreeAutomaton::random(3, &alphabet, 0.4, rng)?;
    let (_, tmu) = ta.tree_rep()?;
    let trees = Tree::enumerate(&alphabet, 7);
    t.law("tree circuit acceptance equals δ*", trees.len(), |k| {
        let tr = &trees[k];
        let by_rep = tmu.eval(&crate::automata::tree_to_circuit(tr))?.as_scalar().expect("closed").0;
        Ok((by_rep != ta.accepts(tr)?).then(|| tr.to_string()))
    })?;
    // brick walls
    let wall = bossut::automaton();
    t.single("the 8-wide 4-row wall is accepted", wall.accepts(&bossut::displayed_wall())?, || bossut::displayed_wall().to_string());
    let near = bossut::near_walls();
    t.law("near-walls are rejected", near.len(), |k| Ok(wall.accepts(&near[k].1)?.then(|| near[k].0.clone())))?;
    // u ⊙ v membership
    let (l1, l2): (WordAutomaton<Boolean>, WordAutomaton<Boolean>) = (random_dfa(3, 2, rng)?, random_dfa(3, 2, rng)?);
    let prod = lang_odot(&l1, 2, &l2, 2)?;
    let pairs: Vec<(Vec<usize>, Vec<usize>)> = (0..=4)
        .flat_map(|len| {
            let ws = all_words(2, len);
            ws.iter().flat_map(|u| ws.iter().map(move |v| (u.clone(), v.clone()))).collect::<Vec<_>>()
        })
        .collect();
    t.law("u ⊙ v ∈ L ⊙ L' iff u ∈ L and v ∈ L'", pairs.len(), |k| {
        let (u, v) = &pairs[k];
        let both = l1.coeff_digits(u)?.0 && l2.coeff_digits(v)?.0;
        let joint = prod.coeff_digits(&word_odot(u, v, 2)?)?.0;
        Ok((both != joint).then(|| format!("u={u:?}, v={v:?}")))
    })
}

fn random_word_automaton(rng: &mut ChaCha8Rng, states: usize, letters: &[&str]) -> WordAutomaton<Natural> {
    let vec = |rng: &mut ChaCha8Rng| (0..states).map(|_| Natural::from(rng.gen_range(0..3u64))).collect::<Vec<_>>();
    let lambda = vec(rng);
    let gamma = vec(rng);
    let rho = letters.iter().map(|&l| (l, (0..states).map(|_| vec(rng)).collect())).collect();
    WordAutomaton::from_rows(lambda, rho, gamma).expect("consistent sizes")
}

/// `λ ρ(w_1) .. ρ(w_n) γ` by explicit row-vector products.
fn direct_behavior(a: &WordAutomaton<Natural>, w: &[&str]) -> Natural {
    let q = a.states();
    let mut row = a.lambda().to_vec();
    for l in w {
        let m = a.rho(l).expect("known letter");
        row = (0..q)
            .map(|j| (0..q).fold(Natural::zero(), |acc, i| acc.add(&row[i].mul(m.get(&[i + 1], &[j + 1]).expect("in range")))))
            .collect();
    }
    row.iter().zip(a.gamma()).fold(Natural::zero(), |acc, (x, g)| acc.add(&x.mul(g)))
}

fn temperley_lieb(t: &mut Tally) -> Result<()> {
    let mu = tl::standard_rep();
    let d = RationalFunction::d();
    let loop_value = tl::check_relations(&mu);
    t.single("snakes are identities and the loop is d", loop_value.as_ref().map(|v| *v == d).unwrap_or(false), || format!("{loop_value:?}"));
    let mut gens = Vec::new();
    for n in 2..=5 {
        for i in 1..n {
            gens.push((n, i));
        }
    }
    t.law("U_i U_i = d U_i", gens.len(), |k| {
        let (n, i) = gens[k];
        let u = mu.eval(&tl::u_term(n, i)?)?;
        Ok(differ(&mu.eval(&tl::u_word_term(n, &[i, i])?)?, &u.scale(&d)).map(|w| format!("n={n}, i={i}: {w}")))
    })?;
    t.law("U_i U_{i±1} U_i = U_i", gens.len(), |k| {
        let (n, i) = gens[k];
        let u = mu.eval(&tl::u_term(n, i)?)?;
        for j in [i.wrapping_sub(1), i + 1] {
            if j >= 1 && j < n {
                if let Some(w) = differ(&mu.eval(&tl::u_word_term(n, &[i, j, i])?)?, &u) {
                    return Ok(Some(format!("n={n}, i={i}, j={j}: {w}")));
                }
            }
        }
        Ok(None)
    })?;
    t.law("far generators commute", gens.len(), |k| {
        let (n, i) = gens[k];
        for j in i + 2..n {
            if let Some(w) = differ(&mu.eval(&tl::u_word_term(n, &[i, j])?)?, &mu.eval(&tl::u_word_term(n, &[j, i])?)?) {
                return Ok(Some(format!("n={n}, i={i}, j={j}: {w}")));
            }
        }
        Ok(None)
    })?;
    t.law("tr(wires) = 2^n and tr(U_i) = 2^(n-2) d", gens.len(), |k| {
        let (n, i) = gens[k];
        let wires = mu.eval(&Term::wires(n))?.trace()?;
        let u = mu.eval(&tl::u_term(n, i)?)?.trace()?;
        let ok = wires == RationalFunction::from_int(1 << n) && u == RationalFunction::from_int(1 << (n - 2)).mul(&d);
        Ok((!ok).then(|| format!("n={n}, i={i}: {wires}, {u}")))
    })
}

fn quantum(t: &mut Tally, tol: f64) -> Result<()> {
    let c = qg::cnot_matrix();
    let mut w = None;
    for (a, b, cc, dd) in (0..16).map(|k| (k & 1, (k >> 1) & 1, (k >> 2) & 1, k >> 3)) {
        let want = if b == dd && cc == (a + b) % 2 { ComplexF64::one() } else { ComplexF64::zero() };
        let got = qg::entry(&c, &[a, b], &[cc, dd])?;
        if !got.eq_within(&want, tol) && w.is_none() {
            w = Some(format!("C^{a}{b}_{cc}{dd} = {got}"));
        }
    }
    t.single("CNOT network is δ_{b,d} δ_{c,a+b mod 2}", w.is_none(), || w.clone().unwrap_or_default());
    for (name, g) in [("H", qg::hadamard_gate()), ("cV", qg::cv_gate()), ("CNOT", c.clone())] {
        let r = qg::unitarity_residual(&g)?;
        t.single(format!("{name} is unitary"), r < tol, || format!("residual {r:e}"));
    }
    let phi = qg::QubitState::basis_sum(2, &[&[0, 0], &[0, 1]])?;
    let bell = qg::QubitState::basis_sum(2, &[&[0, 0], &[1, 1]])?;
    let out = phi.apply(&c)?;
    t.single("CNOT(|00⟩+|01⟩) = |00⟩+|11⟩", out.eq_within(&bell, tol) && !out.is_product(tol)?, || out.to_string());
    Ok(())
}
