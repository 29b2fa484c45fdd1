//! The subring generated by zero-dimensional varieties.
//!
//! The class x_nu of the degree-nu field extension satisfies
//! x_a x_b = gcd(a,b) x_lcm(a,b): points of a product split by degrees.
//! The ring therefore has plenty of zero divisors, found here
//! explicitly, and a family of point-count measures psi_n with
//! psi_n(x_nu) = nu when nu | n and 0 otherwise.

use grothwitt::k0::{measure_of_etale, SElement};
use grothwitt::{Error, Int};

fn main() -> Result<(), Error> {
    let x2 = SElement::basis(2);
    let x3 = SElement::basis(3);
    let x6 = SElement::basis(6);

    // gcd(2,3) = 1, lcm(2,3) = 6.
    assert_eq!(x2.mul(&x3), x6);
    println!("x_2 * x_3 = x_6");

    // A class squared picks up its degree: gcd = lcm = nu.
    assert_eq!(x6.mul(&x6), x6.scalar_mul(&Int::from(6)));
    println!("x_6 * x_6 = 6 x_6");

    // Point counts over the degree-n extension, as a ring map.
    let a = SElement::from_terms(vec![(2, Int::from(1)), (3, Int::from(-4))])?;
    println!("\na = x_2 - 4 x_3");
    for n in 1..=6 {
        println!("  psi_{n}(a) = {}", a.psi(n)?);
    }
    let b = x2.add(&x6);
    for n in [6, 12] {
        assert_eq!(a.mul(&b).psi(n)?, a.psi(n)? * b.psi(n)?);
    }
    println!("psi_n is multiplicative (checked at n = 6, 12)");

    // (x_nu)(x_nu - nu) = 0: an explicit zero divisor for every nu > 1.
    for nu in [2, 5, 12] {
        let (u, v) = SElement::zero_divisor_witness(nu)?;
        assert!(u.mul(&v).is_zero());
        assert!(!u.is_zero() && !v.is_zero());
        println!("zero divisors at nu = {nu}: u * v = 0 with u, v != 0");
    }

    // The measure of Spec of the degree-2 extension is (1 - t^2) in the
    // T^0 slot; its ghost components vanish exactly at odd indices.
    let m = measure_of_etale(2)?;
    let zeros: Vec<u64> = (1..=10)
        .filter(|&nu| num_traits::Zero::is_zero(&m.ghost_at_one(nu as usize)))
        .collect();
    println!("\nghost zero set of the measure of Spec k_2 up to 10: {zeros:?}");

    // The same numbers via the abstract ring: psi_n of x_2 is 2 on even
    // n and 0 on odd n, matching the measure's ghosts.
    for n in 1..=10u64 {
        assert_eq!(x2.psi(n)?, m.ghost_at_one(n as usize).to_integer());
    }
    println!("psi_n(x_2) agrees with the ghost components of its measure");
    Ok(())
}
