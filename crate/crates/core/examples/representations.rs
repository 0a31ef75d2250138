//! Representations of a free PRO: evaluation, the Hadamard product and the
//! quasi-direct sum, which only respects connected circuits.

use prokit::circuit::{is_connected, ChipDecl, Signature, Term};
use prokit::hypermat::Hypermatrix;
use prokit::represent::Representation;
use prokit::semiring::Natural;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_rep(sig: &Signature, dim: usize, rng: &mut ChaCha8Rng) -> prokit::Result<Representation<Natural>> {
    let chips = sig.chips().map(|c| Ok((c.name.clone(), Hypermatrix::random(dim, c.out, c.inp, rng)?)));
    Representation::for_signature(sig, dim, chips.collect::<prokit::Result<Vec<_>>>()?)
}

fn main() -> prokit::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sig = Signature::new([ChipDecl::new("f", 1, 1), ChipDecl::new("m", 1, 2)])?;
    let mu = random_rep(&sig, 2, &mut rng)?;
    let nu = random_rep(&sig, 2, &mut rng)?;
    let (f, m) = (sig.chip("f")?, sig.chip("m")?);

    let connected = f.vcomp(&m)?.vcomp(&f.hcomp(&f))?;
    let split = f.hcomp(&f);
    for (name, t) in [("connected", &connected), ("disconnected", &split), ("wires", &Term::wires(2))] {
        let hadamard = mu.hadamard(&nu)?.eval(t)? == mu.eval(t)?.kronecker(&nu.eval(t)?)?;
        let sum = mu.quasi_sum(&nu)?.eval(t)? == mu.eval(t)?.quasi_direct_sum(&nu.eval(t)?)?;
        println!("{name:>12} {t}: connected={}, ⊙ respected={hadamard}, ⊕̂ respected={sum}", is_connected(t));
    }
    println!("{}", serde_json::to_string(&mu.to_json()).expect("serializable"));
    Ok(())
}
