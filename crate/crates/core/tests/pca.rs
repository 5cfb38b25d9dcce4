use permscape::stats::{
    build_dataset, component_score_correlations, correlation_matrix, correlation_study, jacobi_eigen, pearson,
};
use permscape::{Measure, Permutation, RandomSource, SamplingMode};

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap()
}

#[test]
fn streaming_matches_two_pass_pearson() {
    let measures = Measure::pca_defaults();
    let reference = Permutation::identity(7);
    let data = build_dataset::<f64>(7, &measures, SamplingMode::Exhaustive, &reference).unwrap();
    assert_eq!(data.len(), 5040);
    let study = correlation_study::<f64>(7, &measures, SamplingMode::Exhaustive, &reference).unwrap();
    let streamed = correlation_matrix(&data).unwrap();
    for i in 0..measures.len() {
        for j in 0..measures.len() {
            let direct = pearson(&data.column(i), &data.column(j)).unwrap();
            assert!((study.correlation[(i, j)] - direct).abs() < 1e-12, "({i}, {j})");
            assert!((streamed[(i, j)] - direct).abs() < 1e-12, "({i}, {j})");
        }
    }
}

#[test]
fn sampled_streaming_matches_materialized() {
    let measures = Measure::pca_defaults();
    let reference = Permutation::identity(30);
    let mode = SamplingMode::Sampled { samples: 20_000, seed: 5 };
    let data = build_dataset::<f64>(30, &measures, mode, &reference).unwrap();
    let study = correlation_study::<f64>(30, &measures, mode, &reference).unwrap();
    let direct = correlation_matrix(&data).unwrap();
    assert!(study.correlation.max_abs_diff(&direct) < 1e-12);
}

#[test]
fn correlations_do_not_depend_on_the_reference() {
    let measures = Measure::pca_defaults();
    let random = Permutation::random(8, &mut RandomSource::new(8)).unwrap();
    let a = correlation_study::<f64>(8, &measures, SamplingMode::Exhaustive, &Permutation::identity(8)).unwrap();
    let b = correlation_study::<f64>(8, &measures, SamplingMode::Exhaustive, &random).unwrap();
    assert!(a.correlation.max_abs_diff(&b.correlation) < 1e-9);
}

#[test]
fn loadings_equal_component_score_correlations() {
    let measures = Measure::pca_defaults();
    let data = build_dataset::<f64>(8, &measures, SamplingMode::Exhaustive, &Permutation::identity(8)).unwrap();
    let pca = jacobi_eigen(&correlation_matrix(&data).unwrap()).unwrap();
    let scores = component_score_correlations(&data, &pca).unwrap();
    // components with vanishing variance have undefined score correlations
    let informative = pca.eigenvalues.iter().filter(|&&l| l > 1e-8).count();
    for i in 0..measures.len() {
        for c in 0..informative {
            assert!((pca.loadings[(i, c)] - scores[(i, c)]).abs() < 1e-9, "({i}, {c})");
        }
    }
    let total: f64 = pca.proportions.iter().sum();
    assert!((total - 1.0).abs() < 1e-12);
    assert!((pca.cumulative.last().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn small_exhaustive_study_has_unit_diagonal() {
    let study = correlation_study::<f64>(4, &Measure::pca_defaults(), SamplingMode::Exhaustive, &Permutation::identity(4));
    let study = study.unwrap();
    assert_eq!(study.rows, 24);
    for i in 0..11 {
        assert_eq!(study.correlation[(i, i)], 1.0);
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let measures = Measure::pca_defaults();
    let reference = Permutation::identity(25);
    let mode = SamplingMode::Sampled { samples: 100_000, seed: 77 };
    let one = pool(1).install(|| correlation_study::<f64>(25, &measures, mode, &reference).unwrap());
    let three = pool(3).install(|| correlation_study::<f64>(25, &measures, mode, &reference).unwrap());
    assert_eq!(one.correlation, three.correlation);
    assert_eq!(one.means, three.means);
}

#[test]
fn single_precision_tracks_double() {
    let measures = Measure::pca_defaults();
    let reference = Permutation::identity(7);
    let a = correlation_study::<f64>(7, &measures, SamplingMode::Exhaustive, &reference).unwrap();
    let b = correlation_study::<f32>(7, &measures, SamplingMode::Exhaustive, &reference).unwrap();
    for i in 0..measures.len() {
        for j in 0..measures.len() {
            assert!((a.correlation[(i, j)] - b.correlation[(i, j)] as f64).abs() < 1e-4);
        }
    }
}
