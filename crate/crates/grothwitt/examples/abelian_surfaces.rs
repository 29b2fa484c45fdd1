//! Certified independence of two abelian-surface characters.
//!
//! The Frobenius eigenvalues of the two surfaces are monomials in three
//! multiplicatively independent units T_1, T_2, T_3 and a root of unity
//! S of order 2; the second surface twists two eigenvalues by S. The
//! Jacobi criterion over the group algebra decides algebraic
//! independence of the eigenvalue sums: if some 2x2 minor of the
//! Jacobian is nonzero at a point with S specialized to a primitive
//! root of unity, no polynomial relation can hold.

use grothwitt::cyclotomic::CycField;
use grothwitt::indep::{CharSystem, EigenvalueMonomial, Verdict};
use grothwitt::{Error, Int, Rat};

fn mono(root_exponent: u64, exps: [i64; 3]) -> EigenvalueMonomial {
    EigenvalueMonomial {
        root_exponent,
        exps: exps.to_vec(),
    }
}

fn main() -> Result<(), Error> {
    // f_1 = T1 + T2 + T3 + T1 T2 / T3
    // f_2 = T1 + T2 + S T3 + S T1 T2 / T3
    let system = CharSystem::new(
        3,
        2,
        vec![
            vec![
                mono(0, [1, 0, 0]),
                mono(0, [0, 1, 0]),
                mono(0, [0, 0, 1]),
                mono(0, [1, 1, -1]),
            ],
            vec![
                mono(0, [1, 0, 0]),
                mono(0, [0, 1, 0]),
                mono(1, [0, 0, 1]),
                mono(1, [1, 1, -1]),
            ],
        ],
    )?;

    // Specialize S = -1 and (T1, T2, T3) = (-1, 1, 1): the Jacobian
    // becomes an explicit integer matrix.
    let field = CycField::new(2)?;
    let point = vec![
        Rat::from_integer(Int::from(-1)),
        Rat::from_integer(Int::from(1)),
        Rat::from_integer(Int::from(1)),
    ];
    let jac = system.jacobian();
    println!("Jacobian at S = -1, (T1,T2,T3) = (-1,1,1):");
    for row in &jac {
        let mut entries = Vec::new();
        for e in row {
            let v = e.specialize(&field, &point)?;
            entries.push(v.first().map_or_else(|| "0".into(), |c| c.to_string()));
        }
        println!("  [{}]", entries.join(", "));
    }

    let rank = system.jacobian_rank_at(2, &point)?;
    println!("rank = {rank}");
    assert_eq!(rank, 2);

    // The randomized witness search finds such a point on its own.
    match system.independence_witness(100, 0)? {
        Verdict::IndependentCertified { divisor, point } => {
            let coords: Vec<String> = point.iter().map(|c| c.to_string()).collect();
            println!(
                "witness: rank 2 at S of order {divisor}, point ({})",
                coords.join(", ")
            );
        }
        other => panic!("expected a certificate, got {other:?}"),
    }
    println!("the two characters are algebraically independent");
    Ok(())
}
