//! Exact arithmetic on measures as rational Witt vectors.
//!
//! Differences of polynomials with constant term 1 are closed under
//! Witt addition and multiplication, so a measure never needs series
//! truncation: it is a polynomial in T whose coefficients are ratios
//! num/den of such polynomials. Ghost components of a measure are then
//! polynomials in T over Q, and taking ghosts is a ring homomorphism.

use grothwitt::poly::det_one_minus_at;
use grothwitt::rational_witt::{MotivicMeasurePoly, OnePoly, WittRational};
use grothwitt::{Error, Int, Rat};

fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

fn main() -> Result<(), Error> {
    // Witt product of polynomials stays polynomial: lines multiply to
    // lines, and in general the roots multiply pairwise.
    let p = OnePoly::linear(&rat(2));
    let q = OnePoly::linear(&rat(3));
    let pq = p.witt_mul(&q);
    assert_eq!(pq, OnePoly::linear(&rat(6)));
    println!("(1 - 2t) *_W (1 - 3t) = 1 - 6t");

    // The characteristic series det(1 - At) of integer matrices realize
    // the same operations: block sum gives the Witt sum, tensor product
    // the Witt product.
    let a = vec![vec![Int::from(2), Int::from(1)], vec![Int::from(0), Int::from(3)]];
    let b = vec![vec![Int::from(-1)]];
    let ca = OnePoly::from_full(&det_one_minus_at(&a))?;
    let cb = OnePoly::from_full(&det_one_minus_at(&b))?;
    let tensor: Vec<Vec<Int>> = a
        .iter()
        .map(|row| row.iter().map(|x| x * &b[0][0]).collect())
        .collect();
    let ct = OnePoly::from_full(&det_one_minus_at(&tensor))?;
    assert_eq!(ca.witt_mul(&cb), ct);
    println!("det(1 - (A (x) B) t) = det(1 - At) *_W det(1 - Bt)");

    // Frobenius on a polynomial raises its inverse roots to the m-th
    // power, all exactly through Newton power sums.
    let f = OnePoly::new(vec![rat(-1), rat(2)]);
    let f2 = f.frobenius(2)?;
    println!(
        "F_2 of 1 - t + 2t^2 has tail coefficients {:?}",
        f2.tail_coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()
    );

    // A measure with a genuine denominator: the T^1 slot of a curve
    // measure is 1 / P(t). Its ghosts still come out exactly.
    let one = OnePoly::one();
    let middle = WittRational::new(one.clone(), f.clone());
    let m = MotivicMeasurePoly::new(vec![
        WittRational::new(OnePoly::linear(&rat(1)), one.clone()),
        middle,
        WittRational::new(OnePoly::linear(&rat(2)), one.clone()),
    ]);
    println!("\nghost components of the genus-1 measure (T^0..T^2):");
    for nu in 1..=4 {
        let g = m.ghost(nu);
        let parts: Vec<String> = g.iter().map(|c| c.to_string()).collect();
        println!("  nu = {nu}: [{}]  ->  at T=1: {}", parts.join(", "), m.ghost_at_one(nu));
    }

    // Taking ghosts is multiplicative: the ghost polynomial of a
    // product of measures is the product of the ghost polynomials.
    let prod = m.mul(&m);
    for nu in 1..=4 {
        let g = m.ghost(nu);
        let gp = prod.ghost(nu);
        let mut square = vec![Rat::from_integer(0.into()); 2 * g.len() - 1];
        for (i, x) in g.iter().enumerate() {
            for (j, y) in g.iter().enumerate() {
                square[i + j] += x * y;
            }
        }
        assert_eq!(gp, square);
    }
    println!("ghost(m * m) = ghost(m)^2 as polynomials in T (nu <= 4)");
    Ok(())
}
