use accelrad::PhysicalParams;
use accelrad_cli::config::{parse_kv, PartialSweep, RunConfig};
use accelrad_cli::csvout::write_rows;
use accelrad_cli::{run_sweep, Case, MethodChoice, Scale, SweepSpec, Variable};
use proptest::prelude::*;

fn spec(from: f64, to: f64, points: usize, scale: Scale) -> SweepSpec {
    SweepSpec { variable: Variable::Omega, from, to, points, scale, case: Case::Atom, method: MethodChoice::Exact }
}

proptest! {
    #[test]
    fn grid_is_ordered_with_exact_ends(from in 1e2f64..1e5, span in 1.001f64..1e3, points in 2usize..200, log in any::<bool>()) {
        let s = spec(from, from * span, points, if log { Scale::Log } else { Scale::Linear });
        prop_assert!(s.validate().is_ok());
        prop_assert_eq!(s.validate(), s.validate());
        let g = s.grid();
        prop_assert_eq!(g.len(), points);
        prop_assert_eq!(g[0], s.from);
        prop_assert_eq!(g[points - 1], s.to);
        prop_assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn invalid_sweeps_are_rejected(from in 1.0f64..1e5, back in 0.0f64..1.0, points in 0usize..2) {
        prop_assert!(spec(from, from * back, 5, Scale::Linear).validate().is_err());
        prop_assert!(spec(from, 2.0 * from, points, Scale::Linear).validate().is_err());
        prop_assert!(spec(-from, from, 5, Scale::Log).validate().is_err());
    }

    #[test]
    fn csv_has_one_row_per_point(points in 2usize..12) {
        let base = PhysicalParams::new(1e15, 1e4, 1e5, 0.01, 1e7).with_c(3e8);
        let rows = run_sweep(&base, &spec(1e4, 1e6, points, Scale::Log));
        let mut buf = Vec::new();
        write_rows(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        prop_assert_eq!(text.lines().count(), points + 1);
        prop_assert!(text.lines().skip(1).all(|l| l.split(',').count() == 8));
    }

    #[test]
    fn config_numbers_round_trip(a in 1e10f64..1e18, nu in 1.0f64..1e9, z0 in 1e-6f64..1.0) {
        let text = format!("a = {a}\nnu={nu}\n  z0 =  {z0}  # distance\n");
        let mut cfg = RunConfig::default();
        cfg.apply_map(&parse_kv(&text).unwrap(), &mut PartialSweep::default()).unwrap();
        prop_assert_eq!((cfg.params.a, cfg.params.nu, cfg.params.z0), (a, nu, z0));
    }
}
