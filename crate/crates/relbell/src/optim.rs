//! Derivative-free maximization used by the CHSH searches: a standard
//! Nelder-Mead simplex refined from multiple deterministic starting points.
//!
//! Starting points come from a low-discrepancy Kronecker sequence whose
//! per-dimension offsets are derived from a user seed, so a given
//! configuration always explores exactly the same points.

/// Outcome of one multistart maximization.
#[derive(Clone, Debug)]
pub(crate) struct MaximizeOutcome {
    pub point: Vec<f64>,
    pub value: f64,
    /// Total simplex iterations summed over all starts.
    pub iterations: usize,
    /// Whether the run that produced the best value met the tolerance.
    pub converged: bool,
}

/// Maximizes `f` over `dim` unconstrained coordinates. The search runs one
/// simplex per entry of `anchors` plus `multistarts` low-discrepancy points,
/// and keeps the best result.
pub(crate) fn maximize_multistart<F>(
    f: F,
    dim: usize,
    anchors: &[Vec<f64>],
    multistarts: usize,
    seed: u64,
    tolerance: f64,
    max_iterations: usize,
) -> MaximizeOutcome
where
    F: Fn(&[f64]) -> f64,
{
    let guarded = |x: &[f64]| {
        let v = f(x);
        if v.is_finite() {
            v
        } else {
            f64::NEG_INFINITY
        }
    };

    let mut starts: Vec<Vec<f64>> = anchors.to_vec();
    starts.extend(kronecker_sequence(dim, multistarts, seed));

    let mut best: Option<MaximizeOutcome> = None;
    let mut total_iterations = 0;
    for start in &starts {
        let (point, value, iterations, converged) =
            nelder_mead(&guarded, start, 0.3, tolerance, max_iterations);
        total_iterations += iterations;
        let better = match &best {
            None => true,
            Some(current) => value > current.value,
        };
        if better {
            best = Some(MaximizeOutcome {
                point,
                value,
                iterations: 0,
                converged,
            });
        }
    }
    let mut outcome = best.expect("at least one start");
    outcome.iterations = total_iterations;
    outcome
}

/// `multistarts` points of the d-dimensional Kronecker (generalized golden
/// ratio) sequence, scaled to [0, 2π) per coordinate, with seed-dependent
/// offsets.
fn kronecker_sequence(dim: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let phi = plastic_constant(dim);
    let alphas: Vec<f64> = (0..dim)
        .map(|j| (1.0 / phi.powi(j as i32 + 1)).fract())
        .collect();
    let mut state = seed;
    let offsets: Vec<f64> = (0..dim).map(|_| unit_from_bits(splitmix64(&mut state))).collect();

    (0..count)
        .map(|k| {
            (0..dim)
                .map(|j| {
                    let t = (offsets[j] + (k as f64 + 1.0) * alphas[j]).fract();
                    t * std::f64::consts::TAU
                })
                .collect()
        })
        .collect()
}

/// Unique positive root of x^(d+1) = x + 1 (the "plastic constant" family),
/// found by Newton iteration.
fn plastic_constant(dim: usize) -> f64 {
    let exponent = dim as f64 + 1.0;
    let mut x: f64 = 2.0;
    for _ in 0..64 {
        let fx = x.powf(exponent) - x - 1.0;
        let dfx = exponent * x.powf(exponent - 1.0) - 1.0;
        x -= fx / dfx;
    }
    x
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn unit_from_bits(bits: u64) -> f64 {
    (bits >> 11) as f64 / (1u64 << 53) as f64
}

/// Standard Nelder-Mead simplex ascent (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2). Returns (best point, best value,
/// iterations, converged), where convergence means the simplex value spread
/// dropped below `tolerance`.
fn nelder_mead<F>(
    f: &F,
    start: &[f64],
    step: f64,
    tolerance: f64,
    max_iterations: usize,
) -> (Vec<f64>, f64, usize, bool)
where
    F: Fn(&[f64]) -> f64,
{
    let dim = start.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    simplex.push((start.to_vec(), f(start)));
    for i in 0..dim {
        let mut x = start.to_vec();
        x[i] += step;
        let v = f(&x);
        simplex.push((x, v));
    }

    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iterations {
        iterations += 1;
        // Best first.
        simplex.sort_by(|a, b| b.1.partial_cmp(&a.1).expect("finite objective"));
        let spread = simplex[0].1 - simplex[dim].1;
        if spread.abs() < tolerance {
            converged = true;
            break;
        }

        let centroid: Vec<f64> = (0..dim)
            .map(|j| simplex[..dim].iter().map(|(x, _)| x[j]).sum::<f64>() / dim as f64)
            .collect();
        let worst = simplex[dim].clone();
        let combine = |coefficient: f64| -> Vec<f64> {
            (0..dim)
                .map(|j| centroid[j] + coefficient * (centroid[j] - worst.0[j]))
                .collect()
        };

        let reflected = combine(1.0);
        let reflected_value = f(&reflected);
        if reflected_value > simplex[0].1 {
            let expanded = combine(2.0);
            let expanded_value = f(&expanded);
            if expanded_value > reflected_value {
                simplex[dim] = (expanded, expanded_value);
            } else {
                simplex[dim] = (reflected, reflected_value);
            }
            continue;
        }
        if reflected_value > simplex[dim - 1].1 {
            simplex[dim] = (reflected, reflected_value);
            continue;
        }

        let contracted = if reflected_value > worst.1 {
            combine(0.5)
        } else {
            combine(-0.5)
        };
        let contracted_value = f(&contracted);
        if contracted_value > reflected_value.max(worst.1) {
            simplex[dim] = (contracted, contracted_value);
            continue;
        }

        // Shrink toward the best vertex.
        let best = simplex[0].0.clone();
        for entry in simplex.iter_mut().skip(1) {
            for j in 0..dim {
                entry.0[j] = best[j] + 0.5 * (entry.0[j] - best[j]);
            }
            entry.1 = f(&entry.0);
        }
    }

    simplex.sort_by(|a, b| b.1.partial_cmp(&a.1).expect("finite objective"));
    (simplex[0].0.clone(), simplex[0].1, iterations, converged)
}
