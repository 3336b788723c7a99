//! Basis values against an exact rational evaluation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use pindex_core::basis::{bernstein, bernstein_s};

/// C(j, a) x^a (1 - x)^(j - a) with the binomial expanded as a product.
fn exact(j: u32, a: u32, x: &BigRational) -> BigRational {
    let mut binom = BigInt::one();
    for k in 1..=a {
        binom = binom * BigInt::from(j - k + 1) / BigInt::from(k);
    }
    let one = BigRational::one();
    let mut v = BigRational::from_integer(binom);
    for _ in 0..a {
        v *= x;
    }
    let q = &one - x;
    for _ in 0..(j - a) {
        v *= &q;
    }
    v
}

fn tenths(k: i64) -> BigRational {
    BigRational::new(BigInt::from(k), BigInt::from(10))
}

#[test]
fn small_degrees_match_rational_oracle() {
    let mut worst = 0.0_f64;
    for j in 0..=20u32 {
        for k in 1..=9 {
            let x = k as f64 / 10.0;
            for a in 0..=j {
                let want = exact(j, a, &tenths(k)).to_f64().unwrap();
                let got = bernstein(j as usize, a as usize, x).unwrap();
                let rel = (got - want).abs() / want;
                worst = worst.max(rel);
                assert!(rel <= 1e-12, "j={j} a={a} x={x}: {got} vs {want}");
            }
        }
    }
    println!("worst relative error {worst:e}");
}

#[test]
fn hyperauthored_centre_matches_rational_oracle() {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let want = exact(1000, 500, &half).to_f64().unwrap();
    let got = bernstein(1000, 500, 0.5).unwrap();
    assert!((got - want).abs() / want <= 1e-9, "{got} vs {want}");

    // off-centre and in the tails, still on the log-space path
    let x = BigRational::new(BigInt::from(3), BigInt::from(10));
    for a in [0u32, 150, 300, 420, 999] {
        let want = exact(1000, a, &x).to_f64().unwrap();
        let got = bernstein(1000, a as usize, 0.3).unwrap();
        if want == 0.0 {
            assert!(got < 1e-300);
        } else {
            assert!((got - want).abs() / want <= 1e-9, "a={a}: {got} vs {want}");
        }
    }
}

#[test]
fn stretched_basis_matches_rational_oracle() {
    // b_s(j, a, x) = b(j, a, x / s); x = 1/4, s = 11/20
    let chi = BigRational::new(BigInt::from(5), BigInt::from(11));
    for a in 0..=2u32 {
        let want = exact(2, a, &chi).to_f64().unwrap();
        let got = bernstein_s(2, a as usize, 0.25, 0.55).unwrap();
        assert!((got - want).abs() / want <= 1e-12);
    }
}
