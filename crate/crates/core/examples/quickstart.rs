//! Generate a separable dataset, learn a reference point, train, evaluate.

use poincare_linear::*;

fn main() -> Result<()> {
    let cfg = SynthConfig { n: 4_000, dim: 2, r: 0.95, p_norm_fraction: 0.4, eps: 0.1, seed: 7 };
    let (ds, _truth) = generate_synthetic(&cfg)?;
    let (train, test) = train_test_split(&ds, 0.7, 7)?;

    let p = learn_reference_point(&train)?;
    let model = perceptron_train(&train, &p, 10_000)?;

    let correct = test
        .iter()
        .filter(|&(x, label)| predict_binary(model.hyperplane(), x).unwrap().0 == label)
        .count();
    println!("{correct} / {} test points correct", test.len());
    Ok(())
}
