//! Parse/print round trip over randomly generated trinomials in both rings.

use acfactor::{GaussInt, Int, Trinomial};
use acfactor_cli::{parse_polynomial, render_polynomial, ParsedPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn integer_round_trip_1000_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let a = nonzero(&mut rng);
        let t = Trinomial::new(
            Int::new(a),
            Int::new(rng.gen_range(-10_000i128..=10_000)),
            Int::new(rng.gen_range(-10_000i128..=10_000)),
        )
        .unwrap();
        let text = render_polynomial(&ParsedPoly::Integers(t));
        let parsed = parse_polynomial(&text, None).unwrap();
        assert_eq!(
            parsed.poly,
            ParsedPoly::Integers(t),
            "round trip failed for {text:?}"
        );
    }
}

#[test]
fn gaussian_round_trip_1000_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..1000 {
        let a = loop {
            let g = gauss(&mut rng);
            if g != GaussInt::new(0, 0) {
                break g;
            }
        };
        let t = Trinomial::new(a, gauss(&mut rng), gauss(&mut rng)).unwrap();
        let text = render_polynomial(&ParsedPoly::Gaussian(t));
        // Force the Gaussian ring: a random Gaussian trinomial can render
        // without any literal i (all parts real).
        let parsed = parse_polynomial(&text, Some(acfactor_cli::RingChoice::Gaussian)).unwrap();
        assert_eq!(
            parsed.poly,
            ParsedPoly::Gaussian(t),
            "round trip failed for {text:?}"
        );
    }
}

fn nonzero(rng: &mut ChaCha8Rng) -> i128 {
    loop {
        let n = rng.gen_range(-10_000i128..=10_000);
        if n != 0 {
            return n;
        }
    }
}

fn gauss(rng: &mut ChaCha8Rng) -> GaussInt {
    GaussInt::new(
        rng.gen_range(-1000i128..=1000),
        rng.gen_range(-1000i128..=1000),
    )
}
