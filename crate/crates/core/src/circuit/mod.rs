//! Terms of the free PRO over a chip signature.
//!
//! A [`Term`] is a syntax tree over the empty circuit, the wire, chips and
//! the two compositions. Units are absorbed when terms are built, so a term
//! never contains `∅ ↔ p` or a wire stack plugged onto something.
//! Equality of circuits is decided on the wiring diagram, see [`PortGraph`]
//! and [`canonical_key`].

mod components;
mod enumerate;
mod graph;

pub use components::{connected_components, is_connected};
pub use enumerate::{enumerate_all, enumerate_circuits, enumerate_circuits_within, random_circuit};
pub use graph::{canonical_form, canonical_key, Canonical, Edge, Origin, PortGraph, Sink, Source, Vertex};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A generator with `out` outputs (top) and `inp` inputs (bottom).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChipDecl {
    pub name: String,
    pub out: usize,
    pub inp: usize,
}

impl ChipDecl {
    pub fn new(name: impl Into<String>, out: usize, inp: usize) -> Self {
        ChipDecl { name: name.into(), out, inp }
    }

    /// At least one leg on each side.
    pub fn is_pluggable(&self) -> bool {
        self.out >= 1 && self.inp >= 1
    }

    pub fn term(&self) -> Term {
        Term::chip(&self.name, self.out, self.inp)
    }
}

/// A set of chips with unique names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    chips: BTreeMap<String, ChipDecl>,
}

impl Signature {
    pub fn new(chips: impl IntoIterator<Item = ChipDecl>) -> Result<Self> {
        let mut sig = Signature::default();
        for c in chips {
            sig.insert(c)?;
        }
        Ok(sig)
    }

    pub fn insert(&mut self, chip: ChipDecl) -> Result<()> {
        if self.chips.contains_key(&chip.name) {
            return Err(Error::Invalid(format!("duplicate chip `{}`", chip.name)));
        }
        self.chips.insert(chip.name.clone(), chip);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&ChipDecl> {
        self.chips.get(name)
    }

    pub fn chips(&self) -> impl Iterator<Item = &ChipDecl> {
        self.chips.values()
    }

    pub fn len(&self) -> usize {
        self.chips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chips.is_empty()
    }

    pub fn is_pluggable(&self) -> bool {
        self.chips.values().all(ChipDecl::is_pluggable)
    }

    /// Term for a declared chip.
    pub fn chip(&self, name: &str) -> Result<Term> {
        self.get(name).map(ChipDecl::term).ok_or_else(|| Error::UnknownChip(name.to_string()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "chips": self.chips.values().map(|c| json!({"name": c.name, "out": c.out, "in": c.inp})).collect::<Vec<_>>()
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let list = v
            .get("chips")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("signature needs a `chips` list".into()))?;
        let mut sig = Signature::default();
        for c in list {
            let name = c.get("name").and_then(Value::as_str).ok_or_else(|| Error::Parse("chip needs `name`".into()))?;
            let arity = |k: &str| {
                c.get(k)
                    .and_then(Value::as_u64)
                    .map(|x| x as usize)
                    .ok_or_else(|| Error::Parse(format!("chip `{name}` needs `{k}`")))
            };
            sig.insert(ChipDecl::new(name, arity("out")?, arity("in")?)).map_err(|e| Error::Parse(e.to_string()))?;
        }
        Ok(sig)
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Empty,
    Wire,
    Chip(ChipDecl),
    HComp(Term, Term),
    VComp(Term, Term),
}

/// A circuit term with its cached arity `(out, inp)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    node: Arc<Node>,
    out: usize,
    inp: usize,
    chips: usize,
    wires_only: bool,
}

impl Term {
    fn make(node: Node, out: usize, inp: usize, chips: usize, wires_only: bool) -> Self {
        Term { node: Arc::new(node), out, inp, chips, wires_only }
    }

    pub fn empty() -> Self {
        Term::make(Node::Empty, 0, 0, 0, true)
    }

    pub fn wire() -> Self {
        Term::make(Node::Wire, 1, 1, 0, true)
    }

    /// `|^{↔n}`; `n = 0` is the empty circuit.
    pub fn wires(n: usize) -> Self {
        (0..n).fold(Term::empty(), |acc, _| acc.hcomp(&Term::wire()))
    }

    pub fn chip(name: &str, out: usize, inp: usize) -> Self {
        Term::make(Node::Chip(ChipDecl::new(name, out, inp)), out, inp, 1, false)
    }

    pub fn node(&self) -> &Node {
        &self.node
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.out, self.inp)
    }

    pub fn out_arity(&self) -> usize {
        self.out
    }

    pub fn in_arity(&self) -> usize {
        self.inp
    }

    /// Number of chip occurrences.
    pub fn chip_count(&self) -> usize {
        self.chips
    }

    /// True for the empty circuit and juxtapositions of wires.
    pub fn is_wires(&self) -> bool {
        self.wires_only
    }

    /// Juxtaposition, `self` on the left.
    pub fn hcomp(&self, right: &Term) -> Term {
        if matches!(*self.node, Node::Empty) {
            return right.clone();
        }
        if matches!(*right.node, Node::Empty) {
            return self.clone();
        }
        Term::make(
            Node::HComp(self.clone(), right.clone()),
            self.out + right.out,
            self.inp + right.inp,
            self.chips + right.chips,
            self.wires_only && right.wires_only,
        )
    }

    /// Plugging: `self` on top, its inputs fed by the outputs of `bottom`.
    pub fn vcomp(&self, bottom: &Term) -> Result<Term> {
        if self.inp != bottom.out {
            return Err(Error::Arity(format!(
                "cannot plug a ({},{}) circuit on top of a ({},{}) circuit",
                self.out, self.inp, bottom.out, bottom.inp
            )));
        }
        if self.wires_only {
            return Ok(bottom.clone());
        }
        if bottom.wires_only {
            return Ok(self.clone());
        }
        Ok(Term::make(
            Node::VComp(self.clone(), bottom.clone()),
            self.out,
            bottom.inp,
            self.chips + bottom.chips,
            false,
        ))
    }

    /// Left-to-right juxtaposition of a list.
    pub fn hcat<'a>(parts: impl IntoIterator<Item = &'a Term>) -> Term {
        parts.into_iter().fold(Term::empty(), |acc, t| acc.hcomp(t))
    }

    /// Vertical stack listed top to bottom.
    pub fn vstack<'a>(parts: impl IntoIterator<Item = &'a Term>) -> Result<Term> {
        let parts: Vec<&Term> = parts.into_iter().collect();
        let mut iter = parts.into_iter().rev();
        let Some(first) = iter.next() else {
            return Err(Error::Invalid("empty vertical stack".into()));
        };
        iter.try_fold(first.clone(), |below, above| above.vcomp(&below))
    }

    /// `t^{↔k}`.
    pub fn hpow(&self, k: usize) -> Term {
        (0..k).fold(Term::empty(), |acc, _| acc.hcomp(self))
    }

    /// The chip occurrences in left-to-right, top-to-bottom syntax order.
    pub fn chip_names(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.visit_chips(&mut |c| out.push(c.name.clone()));
        out
    }

    fn visit_chips(&self, f: &mut impl FnMut(&ChipDecl)) {
        match &*self.node {
            Node::Empty | Node::Wire => {}
            Node::Chip(c) => f(c),
            Node::HComp(a, b) | Node::VComp(a, b) => {
                a.visit_chips(f);
                b.visit_chips(f);
            }
        }
    }

    /// Every chip occurrence is declared in `sig` with the same arity.
    pub fn check_signature(&self, sig: &Signature) -> Result<()> {
        let mut err = None;
        self.visit_chips(&mut |c| {
            if err.is_some() {
                return;
            }
            match sig.get(&c.name) {
                None => err = Some(Error::UnknownChip(c.name.clone())),
                Some(d) if d != c => {
                    err = Some(Error::Arity(format!(
                        "chip `{}` used as ({},{}) but declared ({},{})",
                        c.name, c.out, c.inp, d.out, d.inp
                    )))
                }
                _ => {}
            }
        });
        err.map_or(Ok(()), Err)
    }

    pub fn to_port_graph(&self) -> PortGraph {
        PortGraph::from_term(self)
    }

    pub fn canonical_key(&self) -> Vec<u8> {
        canonical_key(&self.to_port_graph())
    }

    /// JSON syntax: `{"chip": name}`, `"wire"`, `"empty"`, `{"h": [..]}`,
    /// `{"v": [top, .., bottom]}`. Nested compositions are flattened.
    pub fn to_json(&self) -> Value {
        match &*self.node {
            Node::Empty => json!("empty"),
            Node::Wire => json!("wire"),
            Node::Chip(c) => json!({"chip": c.name}),
            Node::HComp(..) => {
                let mut parts = Vec::new();
                self.flatten_h(&mut parts);
                json!({"h": parts.iter().map(|t| t.to_json()).collect::<Vec<_>>()})
            }
            Node::VComp(..) => {
                let mut parts = Vec::new();
                self.flatten_v(&mut parts);
                json!({"v": parts.iter().map(|t| t.to_json()).collect::<Vec<_>>()})
            }
        }
    }

    fn flatten_h<'a>(&'a self, out: &mut Vec<&'a Term>) {
        match &*self.node {
            Node::HComp(a, b) => {
                a.flatten_h(out);
                b.flatten_h(out);
            }
            _ => out.push(self),
        }
    }

    fn flatten_v<'a>(&'a self, out: &mut Vec<&'a Term>) {
        match &*self.node {
            Node::VComp(a, b) => {
                a.flatten_v(out);
                b.flatten_v(out);
            }
            _ => out.push(self),
        }
    }

    pub fn from_json(v: &Value, sig: &Signature) -> Result<Term> {
        match v {
            Value::String(s) if s == "wire" => Ok(Term::wire()),
            Value::String(s) if s == "empty" => Ok(Term::empty()),
            Value::Object(o) if o.len() == 1 => {
                let (k, body) = o.iter().next().expect("one key");
                match k.as_str() {
                    "chip" => {
                        let name = body.as_str().ok_or_else(|| Error::Parse("chip name must be a string".into()))?;
                        sig.chip(name)
                    }
                    "h" | "v" => {
                        let list = body.as_array().ok_or_else(|| Error::Parse(format!("`{k}` needs a list")))?;
                        let parts = list.iter().map(|p| Term::from_json(p, sig)).collect::<Result<Vec<_>>>()?;
                        if k == "h" {
                            Ok(Term::hcat(&parts))
                        } else if parts.is_empty() {
                            Ok(Term::empty())
                        } else {
                            Term::vstack(&parts)
                        }
                    }
                    other => Err(Error::Parse(format!("unknown term key `{other}`"))),
                }
            }
            other => Err(Error::Parse(format!("not a circuit term: {other}"))),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.node {
            Node::Empty => f.write_str("∅"),
            Node::Wire => f.write_str("|"),
            Node::Chip(c) => f.write_str(&c.name),
            Node::HComp(..) => {
                let mut parts = Vec::new();
                self.flatten_h(&mut parts);
                let s: Vec<String> = parts.iter().map(|t| t.to_string()).collect();
                write!(f, "({})", s.join(" ↔ "))
            }
            Node::VComp(..) => {
                let mut parts = Vec::new();
                self.flatten_v(&mut parts);
                let s: Vec<String> = parts.iter().map(|t| t.to_string()).collect();
                write!(f, "({})", s.join(" ↕ "))
            }
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} : ({},{})", self.out, self.inp)
    }
}
