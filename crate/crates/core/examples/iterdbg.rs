use birdeg_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;
use std::time::Instant;

fn main() {
    let ring = CoefRing::rationals();
    let vars = Arc::new(vec!["x".into(), "y".into(), "z".into()]);
    let p = |s: &str| parse_polynomial(s, &ring, &vars).unwrap();
    let sigma = ProjectiveMap::normalize(vec![p("y*z"), p("x*z"), p("x*y")]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let m: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| rng.gen_range(-9i64..=9)).collect()).collect();
    eprintln!("matrix {m:?}");
    let a = ProjectiveMap::from_matrix(&ring, &vars, &m).unwrap();
    let f = sigma.compose(&a).unwrap();
    eprintln!("deg f = {}", f.degree());
    let mut acc = ProjectiveMap::identity(&ring, &vars);
    for n in 1..=5u32 {
        let t = Instant::now();
        acc = f.compose(&acc).unwrap();
        eprintln!("n={n} deg={} time={:?}", acc.degree(), t.elapsed());
    }
}
