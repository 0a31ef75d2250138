//! Horizontal and vertical composition, the Kronecker product and the
//! quasi-direct sum on small hypermatrices.

use prokit::hypermat::Hypermatrix;
use prokit::semiring::{Natural, Semiring};

fn show(label: &str, h: &Hypermatrix<Natural>) {
    let (d, p, q) = h.shape();
    println!("{label} in K({d},{p},{q}):");
    for row in h.entries().chunks(h.cols().max(1)) {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  [{}]", cells.join(" "));
    }
}

fn main() -> prokit::Result<()> {
    let nat = |xs: &[u64]| xs.iter().map(|&x| Natural::from(x)).collect::<Vec<_>>();
    let a = Hypermatrix::from_entries(2, 1, 1, nat(&[1, 2, 3, 4]))?;
    let b = Hypermatrix::from_entries(2, 1, 1, nat(&[5, 6, 7, 8]))?;

    show("A ↕ B", &a.vcomp(&b)?);
    show("A ↔ B", &a.hcomp(&b)?);
    show("A ⊙ B", &a.kronecker(&b)?);
    show("A ⊕̂ B", &a.quasi_direct_sum(&b)?);

    // the interchange law
    let lhs = a.vcomp(&b)?.hcomp(&b.vcomp(&a)?)?;
    let rhs = a.hcomp(&b)?.vcomp(&b.hcomp(&a)?)?;
    println!("interchange law holds: {}", lhs == rhs);

    // ⊕̂ is compatible with ↕ but not with ↔
    let one = Hypermatrix::<Natural>::identity(1, 1)?;
    let sum = one.quasi_direct_sum(&one)?;
    let pair = one.hcomp(&one)?;
    let left = sum.hcomp(&sum)?;
    let right = pair.quasi_direct_sum(&pair)?;
    println!(
        "(I(1)⊕̂I(1)) ↔ (I(1)⊕̂I(1)) at [1,2]/[1,2] = {}, (I(1)↔I(1)) ⊕̂ (I(1)↔I(1)) there = {}",
        left.get(&[1, 2], &[1, 2])?,
        right.get(&[1, 2], &[1, 2])?
    );

    let trace = Hypermatrix::<Natural>::identity(3, 2)?.trace()?;
    println!("tr I(3)^{{↔2}} = {trace} = {}", Natural::from(3).pow(2));
    Ok(())
}
