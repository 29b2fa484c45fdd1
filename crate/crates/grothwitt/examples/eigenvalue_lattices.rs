//! The lattice criterion for geometric independence.
//!
//! Each variety contributes the exponent rows of its Frobenius
//! eigenvalues in a fixed free basis (roots of unity ignored). The
//! measures are independent over every finite extension exactly when
//! each variety strictly increases the dimension of the span; base
//! change raises eigenvalues to a power, which rescales rows and so
//! preserves all the dimensions.

use grothwitt::indep::{LatticeSystem, LatticeVerdict};
use grothwitt::Error;

/// n ordinary elliptic curves with pairwise independent eigenvalues:
/// basis (q, pi_1, ..., pi_n), curve i contributing pi_i and q / pi_i.
fn elliptic_family(n: usize) -> LatticeSystem {
    let rank = n + 1;
    let reps = (1..=n)
        .map(|i| {
            let mut pi = vec![0i64; rank];
            pi[i] = 1;
            let mut quot = vec![0i64; rank];
            quot[0] = 1;
            quot[i] = -1;
            vec![pi, quot]
        })
        .collect();
    LatticeSystem { rank, reps }
}

fn main() -> Result<(), Error> {
    let family = elliptic_family(3);
    let (verdict, dims) = family.verdict()?;
    println!("three ordinary elliptic curves: dims = {dims:?}");
    assert_eq!(dims, vec![0, 2, 3, 4]);
    assert_eq!(verdict, LatticeVerdict::GeometricallyIndependent);
    println!("verdict: geometrically independent\n");

    // Inserting a copy of the first curve adds no new dimension and is
    // flagged at its position.
    let mut dup = family.clone();
    dup.reps.insert(1, dup.reps[0].clone());
    let (verdict, dims) = dup.verdict()?;
    println!("with a duplicated curve: dims = {dims:?}");
    assert_eq!(verdict, LatticeVerdict::DependentAt { index: 2 });
    println!("verdict: dependent at item 2\n");

    // Raising all eigenvalues to the L-th power leaves every dimension
    // unchanged, so the verdict is stable under base change.
    for scale in 2..=5i64 {
        let mut scaled = family.clone();
        for rep in &mut scaled.reps {
            for row in rep {
                for entry in row {
                    *entry *= scale;
                }
            }
        }
        assert_eq!(scaled.dims()?, family.dims()?);
    }
    println!("dimensions are invariant under scaling the exponents by 2..5");
    Ok(())
}
