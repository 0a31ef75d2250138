//! Labelings of circuits by wire colors and the path-sum formula for the
//! evaluated entries.

use prokit::circuit::{ChipDecl, Signature};
use prokit::hypermat::Hypermatrix;
use prokit::paths::{enumerate_labelings, path_sum_oracle, weight};
use prokit::represent::Representation;
use prokit::semiring::{Rational, Semiring};

fn main() -> prokit::Result<()> {
    // a (2,2) chip `a` below two (2,1) chips `b`, over three colors
    let sig = Signature::new([ChipDecl::new("a", 2, 2), ChipDecl::new("b", 2, 1)])?;
    let (a, b) = (sig.chip("a")?, sig.chip("b")?);
    let t = b.hcomp(&b).vcomp(&a)?;
    let (x, x2, y, y2) = (Rational::from_int(2), Rational::from_int(3), Rational::from_int(5), Rational::from_int(7));
    let mut ma = Hypermatrix::zeros(3, 2, 2)?;
    ma.set(&[2, 3], &[2, 3], x.clone())?;
    ma.set(&[3, 3], &[2, 3], x2.clone())?;
    let mut mb = Hypermatrix::zeros(3, 2, 1)?;
    mb.set(&[1, 3], &[2], y.clone())?;
    mb.set(&[1, 3], &[3], y2.clone())?;
    let mu = Representation::for_signature(&sig, 3, [("a".to_string(), ma), ("b".to_string(), mb)])?;

    let (out, inp) = ([1, 3, 1, 3], [2, 3]);
    println!("labelings of {t} with boundary {out:?}/{inp:?}:");
    for q in enumerate_labelings(&t, 3, Some(&out), Some(&inp))? {
        let w = weight(&q, &mu)?;
        if !w.is_zero() {
            println!("  colors {:?} weigh {w}", q.colors());
        }
    }
    let by_paths = path_sum_oracle(&t, &mu, &out, &inp)?;
    let by_eval = mu.eval(&t)?.get(&out, &inp)?.clone();
    let formula = x2.mul(&y2).mul(&y2).add(&x.mul(&y2).mul(&y));
    println!("path sum {by_paths}, evaluation {by_eval}, x'y'^2 + xy'y = {formula}");
    Ok(())
}
