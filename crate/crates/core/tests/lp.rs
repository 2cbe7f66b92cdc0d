//! The emitted LP models, read back and minimized by an interpreter that
//! enumerates assignments, must agree with the in-process exact solver.

mod common;

use common::{parse_lp, random_digraph, solve_lp, LpCmp};
use ldrawing::exact::{exact_axis, AxisObjective, ExactMethod};
use ldrawing::lp::emit_lp;
use ldrawing::Axis;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn interpreted_model_optimum_equals_exact_axis() {
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    for _ in 0..12 {
        let n = rng.random_range(1..=5);
        let g = random_digraph(&mut rng, n, 0.45);
        for axis in [Axis::X, Axis::Y] {
            let model = parse_lp(&emit_lp(&g, axis));
            let lp_optimum = solve_lp(&model).expect("assignment models are feasible");
            let (_, exact) =
                exact_axis(&AxisObjective::for_axis(&g, axis), ExactMethod::Enumeration, false)
                    .unwrap();
            assert_eq!(lp_optimum, exact as f64, "axis {axis} disagrees");
        }
    }
}

#[test]
fn model_shape_scales_with_the_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(402);
    for _ in 0..10 {
        let n = rng.random_range(1..=8);
        let g = random_digraph(&mut rng, n, 0.4);
        let m = g.edge_count();
        let model = parse_lp(&emit_lp(&g, Axis::X));
        assert_eq!(model.constraints.len(), 2 * n + 2 * n + 2 * m);
        assert_eq!(model.binaries.len(), n * n);
        assert_eq!(model.generals.len(), 2 * n);
        assert_eq!(model.objective.len(), 2 * n);
        assert_eq!(model.bounds.len(), 2 * n);
        for var in &model.generals {
            assert_eq!(model.bounds[var], (1.0, n as f64));
        }
        let eq_rows = model.constraints.iter().filter(|c| c.cmp == LpCmp::Eq).count();
        assert_eq!(eq_rows, n, "one assignment row per vertex");
    }
}

#[test]
fn axes_swap_endpoint_roles() {
    let g = ldrawing::DirectedGraph::from_edges(2, [(0, 1)]).unwrap();
    let horizontal = emit_lp(&g, Axis::X);
    let vertical = emit_lp(&g, Axis::Y);
    // Horizontal spans live on the head's row and track the tail's
    // column; vertical spans live on the tail's column and track the
    // head's row.
    assert!(horizontal.contains("edge_east_1: E_2 - x_1_1 - 2 x_1_2 >= 0"));
    assert!(vertical.contains("edge_east_1: E_1 - x_2_1 - 2 x_2_2 >= 0"));
}
