//! Wiring diagrams and their canonical serialization.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use super::{Node, Term};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub name: String,
    pub out: usize,
    pub inp: usize,
}

/// Lower end of a wire: a dangling input slot or a chip output port.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    Input(usize),
    Port(usize, usize),
}

/// Upper end of a wire: a dangling output slot or a chip input port.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sink {
    Output(usize),
    Port(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub src: Source,
    pub snk: Sink,
}

/// Where an edge of a composite came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    /// Edge `e` of the left (or top) operand.
    First(usize),
    /// Edge `e` of the right (or bottom) operand.
    Second(usize),
    /// A cut wire: edge of the top operand joined to an edge of the bottom one.
    Joined(usize, usize),
}

/// Chip instances and the wires between them. Wires flow bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PortGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub n_out: usize,
    pub n_in: usize,
}

impl PortGraph {
    pub fn empty() -> Self {
        PortGraph { vertices: vec![], edges: vec![], n_out: 0, n_in: 0 }
    }

    pub fn wire() -> Self {
        PortGraph {
            vertices: vec![],
            edges: vec![Edge { src: Source::Input(0), snk: Sink::Output(0) }],
            n_out: 1,
            n_in: 1,
        }
    }

    pub fn chip(name: &str, out: usize, inp: usize) -> Self {
        let mut edges: Vec<Edge> = (0..out).map(|k| Edge { src: Source::Port(0, k), snk: Sink::Output(k) }).collect();
        edges.extend((0..inp).map(|k| Edge { src: Source::Input(k), snk: Sink::Port(0, k) }));
        PortGraph { vertices: vec![Vertex { name: name.to_string(), out, inp }], edges, n_out: out, n_in: inp }
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.n_out, self.n_in)
    }

    pub fn from_term(t: &Term) -> Self {
        match t.node() {
            Node::Empty => PortGraph::empty(),
            Node::Wire => PortGraph::wire(),
            Node::Chip(c) => PortGraph::chip(&c.name, c.out, c.inp),
            Node::HComp(a, b) => PortGraph::from_term(a).hcomp(&PortGraph::from_term(b)).0,
            Node::VComp(a, b) => {
                PortGraph::from_term(a).vcomp(&PortGraph::from_term(b)).expect("terms are well-arity").0
            }
        }
    }

    /// Juxtaposition with edge provenance.
    pub fn hcomp(&self, right: &PortGraph) -> (PortGraph, Vec<Origin>) {
        let off = self.vertices.len();
        let mut vertices = self.vertices.clone();
        vertices.extend(right.vertices.iter().cloned());
        let mut edges = self.edges.clone();
        let mut origin: Vec<Origin> = (0..self.edges.len()).map(Origin::First).collect();
        for (k, e) in right.edges.iter().enumerate() {
            let src = match e.src {
                Source::Input(j) => Source::Input(j + self.n_in),
                Source::Port(v, p) => Source::Port(v + off, p),
            };
            let snk = match e.snk {
                Sink::Output(i) => Sink::Output(i + self.n_out),
                Sink::Port(v, p) => Sink::Port(v + off, p),
            };
            edges.push(Edge { src, snk });
            origin.push(Origin::Second(k));
        }
        (
            PortGraph { vertices, edges, n_out: self.n_out + right.n_out, n_in: self.n_in + right.n_in },
            origin,
        )
    }

    /// Plugging `self` on top of `bottom`, with edge provenance.
    pub fn vcomp(&self, bottom: &PortGraph) -> Result<(PortGraph, Vec<Origin>)> {
        if self.n_in != bottom.n_out {
            return Err(Error::Arity(format!("cannot plug {} inputs onto {} outputs", self.n_in, bottom.n_out)));
        }
        let off = self.vertices.len();
        let mut vertices = self.vertices.clone();
        vertices.extend(bottom.vertices.iter().cloned());
        let shift_src = |s: Source| match s {
            Source::Input(j) => Source::Input(j),
            Source::Port(v, p) => Source::Port(v + off, p),
        };
        let mut feeding = vec![usize::MAX; bottom.n_out];
        for (k, e) in bottom.edges.iter().enumerate() {
            if let Sink::Output(i) = e.snk {
                feeding[i] = k;
            }
        }
        let mut edges = Vec::with_capacity(self.edges.len() + bottom.edges.len());
        let mut origin = Vec::with_capacity(edges.capacity());
        for (k, e) in self.edges.iter().enumerate() {
            match e.src {
                Source::Input(j) => {
                    let f = feeding[j];
                    edges.push(Edge { src: shift_src(bottom.edges[f].src), snk: e.snk });
                    origin.push(Origin::Joined(k, f));
                }
                Source::Port(..) => {
                    edges.push(*e);
                    origin.push(Origin::First(k));
                }
            }
        }
        for (k, e) in bottom.edges.iter().enumerate() {
            if let Sink::Port(v, p) = e.snk {
                edges.push(Edge { src: shift_src(e.src), snk: Sink::Port(v + off, p) });
                origin.push(Origin::Second(k));
            }
        }
        Ok((PortGraph { vertices, edges, n_out: self.n_out, n_in: bottom.n_in }, origin))
    }

    /// Edge index feeding each sink.
    fn sink_map(&self) -> BTreeMap<Sink, usize> {
        self.edges.iter().enumerate().map(|(k, e)| (e.snk, k)).collect()
    }

    fn source_map(&self) -> BTreeMap<Source, usize> {
        self.edges.iter().enumerate().map(|(k, e)| (e.src, k)).collect()
    }
}

/// Canonical numbering of a port graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub key: Vec<u8>,
    /// `vertex_order[c]` is the original index of the vertex numbered `c`.
    pub vertex_order: Vec<usize>,
    /// `edge_order[c]` is the original index of the `c`-th canonical edge:
    /// edges into output slots first, then edges into chip input ports by
    /// canonical vertex and port.
    pub edge_order: Vec<usize>,
}

/// Serialization that is equal for two graphs iff they are isomorphic by a
/// map preserving interface order and port order.
pub fn canonical_key(g: &PortGraph) -> Vec<u8> {
    canonical_form(g).key
}

pub fn canonical_form(g: &PortGraph) -> Canonical {
    let sinks = g.sink_map();
    let sources = g.source_map();
    let nv = g.vertices.len();
    let mut ids = vec![usize::MAX; nv];
    let mut order = Vec::with_capacity(nv);

    let bfs = |start: usize, ids: &mut Vec<usize>, order: &mut Vec<usize>| {
        let mut queue = VecDeque::new();
        if ids[start] != usize::MAX {
            return;
        }
        ids[start] = order.len();
        order.push(start);
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            let vert = &g.vertices[v];
            let below = (0..vert.inp).map(|p| match g.edges[sinks[&Sink::Port(v, p)]].src {
                Source::Port(w, _) => Some(w),
                Source::Input(_) => None,
            });
            let above = (0..vert.out).map(|p| match g.edges[sources[&Source::Port(v, p)]].snk {
                Sink::Port(w, _) => Some(w),
                Sink::Output(_) => None,
            });
            for w in below.chain(above).flatten() {
                if ids[w] == usize::MAX {
                    ids[w] = order.len();
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
    };

    for i in 0..g.n_out {
        if let Source::Port(v, _) = g.edges[sinks[&Sink::Output(i)]].src {
            bfs(v, &mut ids, &mut order);
        }
    }
    for j in 0..g.n_in {
        if let Sink::Port(v, _) = g.edges[sources[&Source::Input(j)]].snk {
            bfs(v, &mut ids, &mut order);
        }
    }

    // Components without interface: pick the start giving the least local
    // serialization, then order the components by that serialization.
    let mut floating: Vec<(String, Vec<usize>)> = Vec::new();
    for v in 0..nv {
        if ids[v] != usize::MAX {
            continue;
        }
        let mut best: Option<(String, Vec<usize>)> = None;
        let mut comp_ids = ids.clone();
        let mut comp_order = Vec::new();
        bfs(v, &mut comp_ids, &mut comp_order);
        for &start in &comp_order {
            let mut local_ids = vec![usize::MAX; nv];
            let mut local_order = Vec::new();
            bfs(start, &mut local_ids, &mut local_order);
            let s = serialize_vertices(g, &sinks, &local_ids, &local_order);
            if best.as_ref().is_none_or(|(b, _)| s < *b) {
                best = Some((s, local_order));
            }
        }
        for &w in &comp_order {
            ids[w] = usize::MAX - 1;
        }
        floating.push(best.expect("component has a vertex"));
    }
    floating.sort();
    for (_, comp) in &floating {
        for &w in comp {
            ids[w] = order.len();
            order.push(w);
        }
    }

    let mut key = format!("{},{}|", g.n_out, g.n_in);
    for i in 0..g.n_out {
        key.push_str(&describe_source(g.edges[sinks[&Sink::Output(i)]].src, &ids));
        key.push(';');
    }
    key.push('|');
    key.push_str(&serialize_vertices(g, &sinks, &ids, &order));

    let mut edge_order: Vec<usize> = (0..g.n_out).map(|i| sinks[&Sink::Output(i)]).collect();
    for &v in &order {
        for p in 0..g.vertices[v].inp {
            edge_order.push(sinks[&Sink::Port(v, p)]);
        }
    }
    Canonical { key: key.into_bytes(), vertex_order: order, edge_order }
}

fn describe_source(s: Source, ids: &[usize]) -> String {
    match s {
        Source::Input(j) => format!("i{j}"),
        Source::Port(v, p) => format!("v{}.{p}", ids[v]),
    }
}

fn serialize_vertices(g: &PortGraph, sinks: &BTreeMap<Sink, usize>, ids: &[usize], order: &[usize]) -> String {
    let mut s = String::new();
    for &v in order {
        let vert = &g.vertices[v];
        let _ = write!(s, "{}:{}({},{})<", vert.name.len(), vert.name, vert.out, vert.inp);
        for p in 0..vert.inp {
            s.push_str(&describe_source(g.edges[sinks[&Sink::Port(v, p)]].src, ids));
            s.push(';');
        }
        s.push('>');
    }
    s
}
