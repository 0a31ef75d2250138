//! Wire-colored circuits and the path-sum oracle for evaluation.
//!
//! A labeling colors every wire of the port graph with a color in `1..=N`.
//! Its weight under a representation is the product over chip instances of
//! the entry selected by the colors on the chip's ports; summing weights over
//! the labelings with a fixed boundary gives the evaluated entry.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::circuit::{canonical_form, Origin, PortGraph, Sink, Source, Term};
use crate::error::{Error, Result};
use crate::hypermat::{rank, Hypermatrix};
use crate::represent::Representation;
use crate::semiring::Semiring;

/// A circuit with a color on every wire.
#[derive(Debug, Clone)]
pub struct LabeledCircuit {
    term: Term,
    graph: Arc<PortGraph>,
    /// One color per graph edge, 1-based.
    colors: Vec<usize>,
}

impl LabeledCircuit {
    /// Colors are listed per edge of `term.to_port_graph()`.
    pub fn new(term: Term, colors: Vec<usize>, dim: usize) -> Result<Self> {
        let graph = term.to_port_graph();
        if colors.len() != graph.edges.len() {
            return Err(Error::Shape(format!("{} colors for {} wires", colors.len(), graph.edges.len())));
        }
        if colors.iter().any(|&c| c == 0 || c > dim) {
            return Err(Error::Index(format!("colors must lie in 1..={dim}")));
        }
        Ok(LabeledCircuit { term, graph: Arc::new(graph), colors })
    }

    pub fn term(&self) -> &Term {
        &self.term
    }

    pub fn graph(&self) -> &PortGraph {
        &self.graph
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Colors on the output slots, left to right.
    pub fn out_colors(&self) -> Vec<usize> {
        let mut out = vec![0; self.graph.n_out];
        for (e, &c) in self.graph.edges.iter().zip(&self.colors) {
            if let Sink::Output(i) = e.snk {
                out[i] = c;
            }
        }
        out
    }

    /// Colors on the input slots, left to right.
    pub fn in_colors(&self) -> Vec<usize> {
        let mut inp = vec![0; self.graph.n_in];
        for (e, &c) in self.graph.edges.iter().zip(&self.colors) {
            if let Source::Input(j) = e.src {
                inp[j] = c;
            }
        }
        inp
    }

    /// Isomorphism-invariant identity of the colored diagram.
    pub fn labeled_key(&self) -> Vec<u8> {
        let canon = canonical_form(&self.graph);
        let mut key = canon.key;
        key.push(b'#');
        for &e in &canon.edge_order {
            key.extend_from_slice(self.colors[e].to_string().as_bytes());
            key.push(b',');
        }
        key
    }

    pub fn hcomp(&self, right: &LabeledCircuit) -> LabeledCircuit {
        let (graph, origin) = self.graph.hcomp(&right.graph);
        let colors = origin
            .iter()
            .map(|o| match *o {
                Origin::First(e) => self.colors[e],
                Origin::Second(e) => right.colors[e],
                Origin::Joined(..) => unreachable!("juxtaposition joins no wires"),
            })
            .collect();
        LabeledCircuit { term: self.term.hcomp(&right.term), graph: Arc::new(graph), colors }
    }

    /// `None` when the colors on the cut disagree.
    pub fn vcomp(&self, bottom: &LabeledCircuit) -> Result<Option<LabeledCircuit>> {
        let term = self.term.vcomp(&bottom.term)?;
        let (graph, origin) = self.graph.vcomp(&bottom.graph)?;
        let mut colors = Vec::with_capacity(origin.len());
        for o in origin {
            colors.push(match o {
                Origin::First(e) => self.colors[e],
                Origin::Second(e) => bottom.colors[e],
                Origin::Joined(e, f) => {
                    if self.colors[e] != bottom.colors[f] {
                        return Ok(None);
                    }
                    self.colors[e]
                }
            });
        }
        Ok(Some(LabeledCircuit { term, graph: Arc::new(graph), colors }))
    }

    /// `{"term": .., "colors": {wire_id: color}}` with wires numbered in
    /// canonical order.
    pub fn to_json(&self) -> Value {
        let canon = canonical_form(&self.graph);
        let colors: Map<String, Value> =
            canon.edge_order.iter().enumerate().map(|(k, &e)| (k.to_string(), json!(self.colors[e]))).collect();
        json!({"term": self.term.to_json(), "colors": colors})
    }
}

/// Forget the colors.
pub fn unlabel(q: &LabeledCircuit) -> Term {
    q.term.clone()
}

/// Lexicographic stream of labelings, free wires in canonical order.
pub struct Labelings {
    term: Term,
    graph: Arc<PortGraph>,
    dim: usize,
    colors: Vec<usize>,
    free: Vec<usize>,
    done: bool,
}

impl Iterator for Labelings {
    type Item = LabeledCircuit;

    fn next(&mut self) -> Option<LabeledCircuit> {
        if self.done {
            return None;
        }
        let item = LabeledCircuit { term: self.term.clone(), graph: self.graph.clone(), colors: self.colors.clone() };
        self.done = !advance(&mut self.colors, &self.free, self.dim);
        Some(item)
    }
}

fn advance(colors: &mut [usize], free: &[usize], dim: usize) -> bool {
    for &e in free.iter().rev() {
        if colors[e] < dim {
            colors[e] += 1;
            return true;
        }
        colors[e] = 1;
    }
    false
}

fn require_pluggable(t: &Term) -> Result<()> {
    let g = t.to_port_graph();
    if let Some(v) = g.vertices.iter().find(|v| v.out == 0 || v.inp == 0) {
        return Err(Error::Invalid(format!("paths need pluggable chips, `{}` is ({},{})", v.name, v.out, v.inp)));
    }
    Ok(())
}

/// All labelings of `t` over `1..=dim` agreeing with the optional boundary
/// colors; `dim^(number of unconstrained wires)` of them.
pub fn enumerate_labelings(
    t: &Term,
    dim: usize,
    out_colors: Option<&[usize]>,
    in_colors: Option<&[usize]>,
) -> Result<Labelings> {
    require_pluggable(t)?;
    if dim == 0 {
        return Err(Error::Invalid("at least one color is needed".into()));
    }
    let graph = t.to_port_graph();
    for (given, want, side) in [(out_colors, graph.n_out, "output"), (in_colors, graph.n_in, "input")] {
        if let Some(c) = given {
            if c.len() != want {
                return Err(Error::Shape(format!("{} {side} colors for {want} {side} slots", c.len())));
            }
            if c.iter().any(|&x| x == 0 || x > dim) {
                return Err(Error::Index(format!("{side} colors must lie in 1..={dim}")));
            }
        }
    }
    let canon = canonical_form(&graph);
    let mut fixed: Vec<Option<usize>> = vec![None; graph.edges.len()];
    let mut clash = false;
    for (k, e) in graph.edges.iter().enumerate() {
        let mut pin = |c: usize| match fixed[k] {
            Some(old) if old != c => clash = true,
            _ => fixed[k] = Some(c),
        };
        if let (Sink::Output(i), Some(c)) = (e.snk, out_colors) {
            pin(c[i]);
        }
        if let (Source::Input(j), Some(c)) = (e.src, in_colors) {
            pin(c[j]);
        }
    }
    let free: Vec<usize> = canon.edge_order.iter().copied().filter(|&e| fixed[e].is_none()).collect();
    let colors = fixed.iter().map(|c| c.unwrap_or(1)).collect();
    Ok(Labelings { term: t.clone(), graph: Arc::new(graph), dim, colors, free, done: clash })
}

/// Edge indices at each chip's output and input ports.
fn port_edges(g: &PortGraph) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut ports: Vec<(Vec<usize>, Vec<usize>)> =
        g.vertices.iter().map(|v| (vec![usize::MAX; v.out], vec![usize::MAX; v.inp])).collect();
    for (k, e) in g.edges.iter().enumerate() {
        if let Source::Port(v, p) = e.src {
            ports[v].0[p] = k;
        }
        if let Sink::Port(v, p) = e.snk {
            ports[v].1[p] = k;
        }
    }
    ports
}

/// Product over chip instances of `μ(chip)^{out colors}_{in colors}`.
pub fn weight<S: Semiring>(q: &LabeledCircuit, mu: &Representation<S>) -> Result<S> {
    let tables = chip_tables(&q.graph, mu, q.colors.iter().copied().max().unwrap_or(1))?;
    let ports = port_edges(&q.graph);
    Ok(weight_with(&tables, &ports, &q.colors, mu.dim()))
}

fn chip_tables<'a, S: Semiring>(
    g: &PortGraph,
    mu: &'a Representation<S>,
    max_color: usize,
) -> Result<Vec<&'a Hypermatrix<S>>> {
    if max_color > mu.dim() {
        return Err(Error::Index(format!("color {max_color} exceeds the representation dimension {}", mu.dim())));
    }
    g.vertices
        .iter()
        .map(|v| {
            let h = mu.get(&v.name).ok_or_else(|| Error::UnknownChip(v.name.clone()))?;
            if (h.out_rank(), h.in_rank()) != (v.out, v.inp) {
                return Err(Error::Arity(format!("chip `{}` has the wrong ranks", v.name)));
            }
            Ok(h)
        })
        .collect()
}

fn weight_with<S: Semiring>(
    tables: &[&Hypermatrix<S>],
    ports: &[(Vec<usize>, Vec<usize>)],
    colors: &[usize],
    dim: usize,
) -> S {
    let mut acc = S::one();
    for (h, (outs, ins)) in tables.iter().zip(ports) {
        let o: Vec<usize> = outs.iter().map(|&e| colors[e] - 1).collect();
        let i: Vec<usize> = ins.iter().map(|&e| colors[e] - 1).collect();
        let entry = &h.entries()[rank(dim, &o) * h.cols() + rank(dim, &i)];
        if entry.is_zero() {
            return S::zero();
        }
        acc = acc.mul(entry);
    }
    acc
}

/// `Σ weight` over the labelings with boundary `(out_colors, in_colors)`.
pub fn path_sum_oracle<S: Semiring>(
    t: &Term,
    mu: &Representation<S>,
    out_colors: &[usize],
    in_colors: &[usize],
) -> Result<S> {
    let graph = t.to_port_graph();
    let tables = chip_tables(&graph, mu, 1)?;
    let ports = port_edges(&graph);
    let mut acc = S::zero();
    for q in enumerate_labelings(t, mu.dim(), Some(out_colors), Some(in_colors))? {
        acc = acc.add(&weight_with(&tables, &ports, &q.colors, mu.dim()));
    }
    Ok(acc)
}

/// The whole table of path sums, one pass over every labeling of `t`.
pub fn path_sum_table<S: Semiring>(t: &Term, mu: &Representation<S>) -> Result<Hypermatrix<S>> {
    require_pluggable(t)?;
    let dim = mu.dim();
    let graph = t.to_port_graph();
    let tables = chip_tables(&graph, mu, 1)?;
    let ports = port_edges(&graph);
    let mut out_edge = vec![0; graph.n_out];
    let mut in_edge = vec![0; graph.n_in];
    for (k, e) in graph.edges.iter().enumerate() {
        if let Sink::Output(i) = e.snk {
            out_edge[i] = k;
        }
        if let Source::Input(j) = e.src {
            in_edge[j] = k;
        }
    }
    let mut table = Hypermatrix::<S>::zeros(dim, graph.n_out, graph.n_in)?;
    let mut acc: BTreeMap<(Vec<usize>, Vec<usize>), S> = BTreeMap::new();
    let all: Vec<usize> = (0..graph.edges.len()).collect();
    let mut colors = vec![1; graph.edges.len()];
    loop {
        let w = weight_with(&tables, &ports, &colors, dim);
        if !w.is_zero() {
            let key = (out_edge.iter().map(|&e| colors[e]).collect(), in_edge.iter().map(|&e| colors[e]).collect());
            let slot = acc.entry(key).or_insert_with(S::zero);
            *slot = slot.add(&w);
        }
        if !advance(&mut colors, &all, dim) {
            break;
        }
    }
    for ((o, i), v) in acc {
        table.set(&o, &i, v)?;
    }
    Ok(table)
}
