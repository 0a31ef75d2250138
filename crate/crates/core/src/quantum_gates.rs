//! Quantum gates as complex hypermatrices of dimension 2.
//!
//! Qubit indices are `0` and `1` at this interface; the hypermatrix core is
//! 1-based, so every index crossing the boundary is shifted by one.

use std::fmt;

use serde_json::{json, Value};

use crate::circuit::{ChipDecl, Signature, Term};
use crate::error::{Error, Result};
use crate::hypermat::{Hypermatrix, MultiIndex};
use crate::represent::Representation;
use crate::semiring::{ComplexF64, Semiring};

pub const HADAMARD: &str = "H";
pub const CV: &str = "cV";

fn to_one_based(bits: &[usize]) -> Result<Vec<usize>> {
    bits.iter()
        .map(|&b| if b <= 1 { Ok(b + 1) } else { Err(Error::Index(format!("qubit index {b} is not 0 or 1"))) })
        .collect()
}

/// Entry of a gate with 0-based qubit indices.
pub fn entry(gate: &Hypermatrix<ComplexF64>, out: &[usize], inp: &[usize]) -> Result<ComplexF64> {
    gate.get(&to_one_based(out)?, &to_one_based(inp)?).copied()
}

/// `H^0_0 = H^0_1 = H^1_0 = -H^1_1 = 1/√2`.
pub fn hadamard_gate() -> Hypermatrix<ComplexF64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Hypermatrix::from_fn(2, 1, 1, |o, i| ComplexF64::new(if o[0] == 2 && i[0] == 2 { -s } else { s }, 0.0)).expect("2x2")
}

/// Controlled-V: diagonal `(1, 1, 1, i)` on `00, 01, 10, 11`.
pub fn cv_gate() -> Hypermatrix<ComplexF64> {
    Hypermatrix::from_fn(2, 2, 2, |o, i| {
        if o != i {
            ComplexF64::zero()
        } else if o == [2, 2] {
            ComplexF64::i()
        } else {
            ComplexF64::one()
        }
    })
    .expect("4x4")
}

pub fn signature() -> Signature {
    Signature::new([ChipDecl::new(HADAMARD, 1, 1), ChipDecl::new(CV, 2, 2)]).expect("distinct names")
}

pub fn gate_rep() -> Representation<ComplexF64> {
    Representation::for_signature(
        &signature(),
        2,
        [(HADAMARD.to_string(), hadamard_gate()), (CV.to_string(), cv_gate())],
    )
    .expect("shapes match")
}

/// `(H ↔ |) ↕ cV ↕ cV ↕ (H ↔ |)`.
pub fn cnot_network() -> Term {
    let h = Term::chip(HADAMARD, 1, 1).hcomp(&Term::wire());
    let v = Term::chip(CV, 2, 2);
    Term::vstack(&[h.clone(), v.clone(), v, h]).expect("all (2,2)")
}

pub fn cnot_matrix() -> Hypermatrix<ComplexF64> {
    gate_rep().eval(&cnot_network()).expect("chips assigned")
}

/// `conj(g)^J_I = g^I_J` conjugated.
pub fn conjugate_transpose(g: &Hypermatrix<ComplexF64>) -> Hypermatrix<ComplexF64> {
    g.transpose().map(ComplexF64::conj)
}

/// Largest entry of `|g ↕ g† - 1|`.
pub fn unitarity_residual(g: &Hypermatrix<ComplexF64>) -> Result<f64> {
    if g.out_rank() != g.in_rank() {
        return Err(Error::Arity(format!("a ({},{}) gate is not square", g.out_rank(), g.in_rank())));
    }
    let prod = g.vcomp(&conjugate_transpose(g))?;
    let id = Hypermatrix::<ComplexF64>::identity(g.dim(), g.out_rank())?;
    Ok(prod.entries().iter().zip(id.entries()).map(|(a, b)| a.sub(b).abs()).fold(0.0, f64::max))
}

/// A `k`-qubit amplitude table, an element of `K(2, 0, k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QubitState {
    amplitudes: Hypermatrix<ComplexF64>,
}

impl QubitState {
    pub fn new(amplitudes: Hypermatrix<ComplexF64>) -> Result<Self> {
        if amplitudes.dim() != 2 || amplitudes.out_rank() != 0 {
            let (d, p, q) = amplitudes.shape();
            return Err(Error::Shape(format!("a qubit state lives in K(2,0,k), not K({d},{p},{q})")));
        }
        Ok(QubitState { amplitudes })
    }

    /// `Σ c |bits⟩` over the given terms.
    pub fn from_kets(k: usize, terms: &[(ComplexF64, &[usize])]) -> Result<Self> {
        let mut h = Hypermatrix::<ComplexF64>::zeros(2, 0, k)?;
        for (c, bits) in terms {
            if bits.len() != k {
                return Err(Error::Shape(format!("ket of {} qubits in a {k}-qubit state", bits.len())));
            }
            let idx = to_one_based(bits)?;
            let old = *h.get(&[], &idx)?;
            h.set(&[], &idx, old.add(c))?;
        }
        Ok(QubitState { amplitudes: h })
    }

    /// `|bits⟩` with amplitude one for each listed ket.
    pub fn basis_sum(k: usize, kets: &[&[usize]]) -> Result<Self> {
        let terms: Vec<(ComplexF64, &[usize])> = kets.iter().map(|b| (ComplexF64::one(), *b)).collect();
        Self::from_kets(k, &terms)
    }

    pub fn qubits(&self) -> usize {
        self.amplitudes.in_rank()
    }

    pub fn amplitudes(&self) -> &Hypermatrix<ComplexF64> {
        &self.amplitudes
    }

    pub fn amplitude(&self, bits: &[usize]) -> Result<ComplexF64> {
        self.amplitudes.get(&[], &to_one_based(bits)?).copied()
    }

    /// `state ↕ gate`.
    pub fn apply(&self, gate: &Hypermatrix<ComplexF64>) -> Result<QubitState> {
        if gate.out_rank() != self.qubits() || gate.in_rank() != self.qubits() {
            return Err(Error::Shape(format!(
                "a ({},{}) gate cannot act on {} qubits",
                gate.out_rank(),
                gate.in_rank(),
                self.qubits()
            )));
        }
        QubitState::new(self.amplitudes.vcomp(gate)?)
    }

    /// Two-qubit states only: product state iff `α00 α11 - α01 α10 = 0`.
    pub fn is_product(&self, tol: f64) -> Result<bool> {
        if self.qubits() != 2 {
            return Err(Error::Shape(format!("factorizability test needs 2 qubits, got {}", self.qubits())));
        }
        let a = |b: [usize; 2]| self.amplitude(&b).expect("in range");
        let det = a([0, 0]).mul(&a([1, 1])).sub(&a([0, 1]).mul(&a([1, 0])));
        Ok(det.abs() <= tol)
    }

    pub fn eq_within(&self, other: &Self, tol: f64) -> bool {
        self.amplitudes.eq_within(&other.amplitudes, tol)
    }

    pub fn to_json(&self) -> Value {
        let kets: Vec<Value> = self
            .nonzero()
            .map(|(bits, c)| json!({"ket": bits.iter().map(|b| b.to_string()).collect::<String>(), "re": c.0.re, "im": c.0.im}))
            .collect();
        json!({"qubits": self.qubits(), "amplitudes": kets})
    }

    fn nonzero(&self) -> impl Iterator<Item = (Vec<usize>, ComplexF64)> + '_ {
        MultiIndex::all(2, self.qubits()).filter_map(|ix| {
            let c = *self.amplitudes.get(&[], ix.digits()).expect("in range");
            (!c.is_zero()).then(|| (ix.digits().iter().map(|d| d - 1).collect(), c))
        })
    }
}

impl fmt::Display for QubitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nonzero()
            .map(|(bits, c)| {
                let ket: String = bits.iter().map(|b| b.to_string()).collect();
                if c == ComplexF64::one() {
                    format!("|{ket}⟩")
                } else {
                    format!("({c})|{ket}⟩")
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
