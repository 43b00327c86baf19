pub fn probe() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::ChaCha8Rng::seed_from_u64(7);
    let _a: f64 = rng.random_range(-0.5..=0.5);
    let _b: f64 = rng.random();
    let n = rand_distr::Normal::new(0.0f64, 1.0).unwrap();
    let _c: f64 = rand_distr::Distribution::sample(&n, &mut rng);
    let m = nalgebra::DMatrix::<f64>::from_element(3, 3, 1.0);
    let e = m.symmetric_eigen();
    let _v = e.eigenvalues;
}
