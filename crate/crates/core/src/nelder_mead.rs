/// Nelder-Mead simplex maximizer with the standard coefficients:
/// reflection 1, expansion 2, contraction 0.5, shrink 0.5.
///
/// Deterministic by construction: ties in the vertex ordering are broken by
/// insertion index, and the termination test (simplex diameter in the
/// max-coordinate metric below `simplex_tol`, or `max_iters` iterations)
/// depends only on the trajectory. Objectives may return non-finite values;
/// those vertices rank strictly worst and never win a comparison.
#[derive(Debug, Clone)]
pub struct NelderMead {
    pub max_iters: usize,
    pub simplex_tol: f64,
    pub initial_step: f64,
}

/// What one run produced. `best_trace[i]` is the incumbent maximum after
/// iteration i; it is non-decreasing because the incumbent vertex only ever
/// gets replaced by a better one. `max_evaluated` covers every objective
/// call made during the run, including rejected trial points.
#[derive(Debug, Clone)]
pub struct NmOutcome {
    pub best_point: Vec<f64>,
    pub best_value: f64,
    pub evaluations: usize,
    pub iterations: usize,
    pub best_trace: Vec<f64>,
    pub max_evaluated: f64,
}

struct Tracker<'a> {
    objective: &'a dyn Fn(&[f64]) -> f64,
    evaluations: usize,
    max_evaluated: f64,
}

impl<'a> Tracker<'a> {
    /// Returns the value as a cost (negated), mapping non-finite objective
    /// values to +inf so they lose every comparison.
    fn cost(&mut self, x: &[f64]) -> f64 {
        self.evaluations += 1;
        let raw = (self.objective)(x);
        if raw.is_finite() {
            self.max_evaluated = self.max_evaluated.max(raw);
            -raw
        } else {
            f64::INFINITY
        }
    }
}

impl NelderMead {
    pub fn maximize(&self, objective: &dyn Fn(&[f64]) -> f64, start: &[f64]) -> NmOutcome {
        let dim = start.len();
        assert!(dim >= 1, "objective must have at least one parameter");
        let mut tracker = Tracker {
            objective,
            evaluations: 0,
            max_evaluated: f64::NEG_INFINITY,
        };

        // Initial simplex: the start plus one step along each axis.
        let mut points: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
        points.push(start.to_vec());
        for i in 0..dim {
            let mut v = start.to_vec();
            v[i] += self.initial_step;
            points.push(v);
        }
        let mut costs: Vec<f64> = points.iter().map(|p| tracker.cost(p)).collect();

        let mut best_trace = Vec::new();
        let mut iterations = 0;
        while iterations < self.max_iters {
            // Ascending cost, stable in insertion order for exact ties.
            let mut order: Vec<usize> = (0..=dim).collect();
            order.sort_by(|&i, &j| costs[i].total_cmp(&costs[j]));
            points = order.iter().map(|&k| points[k].clone()).collect();
            costs = order.iter().map(|&k| costs[k]).collect();

            let diameter = points[1..]
                .iter()
                .map(|p| {
                    p.iter()
                        .zip(&points[0])
                        .map(|(a, b)| (a - b).abs())
                        .fold(0.0f64, f64::max)
                })
                .fold(0.0f64, f64::max);
            if diameter < self.simplex_tol {
                break;
            }

            let centroid: Vec<f64> = (0..dim)
                .map(|c| points[..dim].iter().map(|p| p[c]).sum::<f64>() / dim as f64)
                .collect();
            let worst = points[dim].clone();
            let reflected: Vec<f64> = centroid
                .iter()
                .zip(&worst)
                .map(|(c, w)| c + (c - w))
                .collect();
            let fr = tracker.cost(&reflected);

            if fr < costs[0] {
                let expanded: Vec<f64> = centroid
                    .iter()
                    .zip(&reflected)
                    .map(|(c, r)| c + 2.0 * (r - c))
                    .collect();
                let fe = tracker.cost(&expanded);
                if fe < fr {
                    points[dim] = expanded;
                    costs[dim] = fe;
                } else {
                    points[dim] = reflected;
                    costs[dim] = fr;
                }
            } else if fr < costs[dim - 1] {
                points[dim] = reflected;
                costs[dim] = fr;
            } else {
                let (contracted, threshold) = if fr < costs[dim] {
                    // Outside: between centroid and the reflected point.
                    let c: Vec<f64> = centroid
                        .iter()
                        .zip(&reflected)
                        .map(|(c, r)| c + 0.5 * (r - c))
                        .collect();
                    (c, fr)
                } else {
                    // Inside: between centroid and the worst vertex.
                    let c: Vec<f64> = centroid
                        .iter()
                        .zip(&worst)
                        .map(|(c, w)| c + 0.5 * (w - c))
                        .collect();
                    (c, costs[dim])
                };
                let fc = tracker.cost(&contracted);
                if fc <= threshold {
                    points[dim] = contracted;
                    costs[dim] = fc;
                } else {
                    // Shrink every vertex toward the best.
                    for k in 1..=dim {
                        points[k] = points[0]
                            .iter()
                            .zip(&points[k])
                            .map(|(b, x)| b + 0.5 * (x - b))
                            .collect();
                        costs[k] = tracker.cost(&points[k]);
                    }
                }
            }

            iterations += 1;
            let incumbent = costs.iter().fold(f64::INFINITY, |m, &c| m.min(c));
            best_trace.push(-incumbent);
        }

        let mut best = 0;
        for k in 1..=dim {
            if costs[k] < costs[best] {
                best = k;
            }
        }
        NmOutcome {
            best_point: points[best].clone(),
            best_value: -costs[best],
            evaluations: tracker.evaluations,
            iterations,
            best_trace,
            max_evaluated: tracker.max_evaluated,
        }
    }
}
