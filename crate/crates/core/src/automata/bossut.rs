//! Brick walls: a three-state PRO automaton over a brick `(2,2)` and a
//! half-brick `(1,1)`, and the row grammar of the walls it accepts.
//!
//! A brick emits `2 3` above and accepts `1 2`, `3 1` or `3 2` below, so a
//! brick sits on the right half of one brick and the left half of the next.
//! A half-brick closes a shifted row: it emits `1` and accepts `2` or `3`.

use crate::circuit::{ChipDecl, Signature, Term};
use crate::hypermat::Hypermatrix;
use crate::represent::Representation;
use crate::semiring::{Boolean, Semiring};

use super::pro::ProAutomaton;
use super::word::{dfa, WordAutomaton};

pub const BRICK: &str = "brick";
pub const HALF: &str = "half";

pub fn signature() -> Signature {
    Signature::new([ChipDecl::new(BRICK, 2, 2), ChipDecl::new(HALF, 1, 1)]).expect("distinct names")
}

pub fn brick() -> Term {
    Term::chip(BRICK, 2, 2)
}

pub fn half() -> Term {
    Term::chip(HALF, 1, 1)
}

/// `E([2,3],[1,2]) + E([2,3],[3,1]) + E([2,3],[3,2])` and
/// `E([1],[2]) + E([1],[3])`.
pub fn representation<S: Semiring>() -> Representation<S> {
    let e = |o: &[usize], i: &[usize]| Hypermatrix::<S>::basis(3, o.len(), i.len(), o, i).expect("valid basis");
    let sum = |hs: Vec<Hypermatrix<S>>| hs.into_iter().reduce(|a, b| a.add(&b).expect("same shape")).expect("non-empty");
    let b = sum(vec![e(&[2, 3], &[1, 2]), e(&[2, 3], &[3, 1]), e(&[2, 3], &[3, 2])]);
    let h = sum(vec![e(&[1], &[2]), e(&[1], &[3])]);
    Representation::for_signature(&signature(), 3, [(BRICK.to_string(), b), (HALF.to_string(), h)]).expect("shapes match")
}

/// `1{2,3}*1 ∪ {2,3}+` as a complete deterministic automaton.
pub fn boundary_language<S: Semiring>() -> WordAutomaton<S> {
    // 0 start, 1 inside `1..`, 2 after `1..1`, 3 inside `{2,3}+`, 4 dead
    let next = vec![vec![1, 3, 3], vec![2, 1, 1], vec![4, 4, 4], vec![4, 3, 3], vec![4, 4, 4]];
    dfa(3, &next, &[2, 3]).expect("valid table")
}

pub fn automaton() -> ProAutomaton<Boolean> {
    ProAutomaton::new(representation(), boundary_language(), boundary_language()).expect("valid automaton")
}

/// Aligned row: `brick^k` for even widths, `brick^k ↔ half` for odd ones.
pub fn aligned_row(width: usize) -> Term {
    let body = brick().hpow(width / 2);
    if width % 2 == 1 {
        body.hcomp(&half())
    } else {
        body
    }
}

/// Shifted row: `half ↔ brick^{k-1} ↔ half` for width `2k`, `half ↔ brick^k`
/// for width `2k+1`.
pub fn shifted_row(width: usize) -> Term {
    if width == 0 {
        return Term::empty();
    }
    if width == 1 {
        return half();
    }
    if width.is_multiple_of(2) {
        half().hcomp(&brick().hpow(width / 2 - 1)).hcomp(&half())
    } else {
        half().hcomp(&brick().hpow(width / 2))
    }
}

/// The row of the given phase: `0` shifted, `1` aligned.
pub fn row(phase: u8, width: usize) -> Term {
    if phase == 0 {
        shifted_row(width)
    } else {
        aligned_row(width)
    }
}

/// `rows` alternating rows of the given width, the top one of phase `top`.
pub fn wall(top: u8, width: usize, rows: usize) -> Term {
    let layers: Vec<Term> = (0..rows).map(|k| row(if k % 2 == 0 { top } else { 1 - top }, width)).collect();
    Term::vstack(&layers).expect("equal widths")
}

/// Every wall of the grammar with the given width and at most `max_rows`
/// rows, plus the bare wires of that width.
pub fn grammar_walls(width: usize, max_rows: usize) -> Vec<Term> {
    let mut out = vec![Term::wires(width)];
    for rows in 1..=max_rows {
        for top in [0, 1] {
            if width == 1 && top == 1 {
                continue;
            }
            out.push(wall(top, width, rows));
        }
    }
    out
}

/// Circuits close to walls that break the grammar.
pub fn near_walls() -> Vec<(String, Term)> {
    let (b, h) = (brick(), half());
    let four_split = h.hcomp(&h).hcomp(&b);
    vec![
        ("aligned over aligned".into(), wall(1, 4, 1).vcomp(&aligned_row(4)).unwrap()),
        ("shifted over shifted".into(), wall(0, 4, 1).vcomp(&shifted_row(4)).unwrap()),
        ("brick split into halves in the wrong phase".into(), four_split.vcomp(&shifted_row(4)).unwrap()),
        (
            "wall of width 8 with a repeated row".into(),
            Term::vstack(&[aligned_row(8), shifted_row(8), shifted_row(8), aligned_row(8)]).unwrap(),
        ),
        (
            "shifted row of width 6 with a brick split into halves".into(),
            aligned_row(6).vcomp(&Term::hcat(&[h.clone(), h.clone(), h.clone(), b.clone(), h.clone()])).unwrap(),
        ),
        ("shifted row over two aligned rows".into(), Term::vstack(&[shifted_row(4), aligned_row(4), aligned_row(4)]).unwrap()),
        ("half-bricks only, two rows".into(), h.hcomp(&h).vcomp(&h.hcomp(&h)).unwrap()),
        ("shifted row missing its left half-brick".into(), Term::wire().hcomp(&b).hcomp(&h).vcomp(&aligned_row(4)).unwrap()),
        ("bricks stacked straight".into(), b.vcomp(&b).unwrap()),
        ("width 2 wall ending in two aligned rows".into(), Term::vstack(&[h.hcomp(&h), b.clone(), h.hcomp(&h), b.clone(), b.clone()]).unwrap()),
        ("wrong corner: half on the right of an aligned row".into(), b.hcomp(&h).hcomp(&h).vcomp(&shifted_row(4)).unwrap()),
    ]
}

/// Grammar walls the automaton rejects. Odd widths have top rows reading
/// `2 3 .. 1` or `1 .. 2 3`, outside the boundary language. At width 2 a
/// brick above two half-bricks would have to accept `1 1`.
pub fn rejected_grammar_walls() -> Vec<Term> {
    vec![shifted_row(1), wall(1, 3, 2), shifted_row(5), wall(1, 7, 4), wall(0, 5, 3), wall(1, 2, 2), wall(0, 2, 3)]
}

/// Whether a grammar wall is accepted: even width, and at width 2 no
/// aligned row above a shifted one.
pub fn grammar_wall_accepted(top: u8, width: usize, rows: usize) -> bool {
    width.is_multiple_of(2) && (width > 2 || rows == 1 || (top == 0 && rows == 2))
}

/// The eight-wide, four-row wall with an aligned top row.
pub fn displayed_wall() -> Term {
    wall(1, 8, 4)
}
