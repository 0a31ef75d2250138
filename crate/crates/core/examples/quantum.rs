//! The CNOT gate as a network of Hadamard and controlled-V gates.

use prokit::quantum_gates::{self as qg, QubitState};

fn main() -> prokit::Result<()> {
    let c = qg::cnot_matrix();
    println!("network: {}", qg::cnot_network());
    for out in [[0, 0], [0, 1], [1, 0], [1, 1]] {
        let row: Vec<String> = [[0, 0], [0, 1], [1, 0], [1, 1]]
            .iter()
            .map(|inp| format!("{:>4.1}", qg::entry(&c, &out, inp).map(|x| x.0.re).unwrap_or(f64::NAN)))
            .collect();
        println!("  {}{} | {}", out[0], out[1], row.join(" "));
    }
    println!("unitarity residual {:.1e}", qg::unitarity_residual(&c)?);
    let phi = QubitState::basis_sum(2, &[&[0, 0], &[0, 1]])?;
    let out = phi.apply(&c)?;
    println!("{phi} (product: {}) becomes {out} (product: {})", phi.is_product(1e-12)?, out.is_product(1e-12)?);
    Ok(())
}
