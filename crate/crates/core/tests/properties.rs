use proptest::prelude::*;

use weno_core::config::{parse_config, RunConfig, SCHEME_NAMES};
use weno_core::diagnostics::io::{read_records, write_records};
use weno_core::diagnostics::{probe_row, Sample1D, TraceRecord};
use weno_core::kernel::{
    js_weights, reconstruct_left_detailed, reconstruct_right, reverse, smoothness_indicators, substencil_values,
    IDEAL_WEIGHTS,
};
use weno_core::mapping::{apply_mapping, is_nonop_instance, MappingSpec, NONOP_TOLERANCE};
use weno_core::problems::PROBLEM_NAMES;

fn any_spec() -> impl Strategy<Value = MappingSpec> {
    (0usize..6).prop_map(|i| MappingSpec::all_schemes()[i].clone())
}

fn window() -> impl Strategy<Value = [f64; 5]> {
    prop::array::uniform5(-10.0f64..10.0)
}

proptest! {
    #[test]
    fn mapped_values_stay_in_unit_interval(spec in any_spec(), s in 0usize..3, w in 0.0f64..=1.0) {
        let g = spec.map(s, w);
        prop_assert!((0.0..=1.0 + 1e-14).contains(&g), "{spec} g_{s}({w}) = {g}");
    }

    #[test]
    fn mappings_are_nondecreasing(spec in any_spec(), s in 0usize..3, a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(spec.map(s, lo) <= spec.map(s, hi) + 1e-14);
    }

    #[test]
    fn final_weights_are_a_partition_of_unity(spec in any_spec(), w in window()) {
        let omega = js_weights(&smoothness_indicators(&w), 1e-6, &IDEAL_WEIGHTS);
        let m = apply_mapping(&omega, &spec);
        prop_assert!((m.omega.iter().sum::<f64>() - 1.0).abs() <= 1e-14);
        prop_assert!(m.omega.iter().all(|&x| x >= 0.0));
    }

    #[test]
    fn reconstruction_lies_between_substencil_values(spec in any_spec(), w in window()) {
        let r = reconstruct_left_detailed(&w, &spec, 1e-40);
        let u = substencil_values(&w);
        let lo = u.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = u.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let slack = 1e-12 * (1.0 + lo.abs().max(hi.abs()));
        prop_assert!(r.value >= lo - slack && r.value <= hi + slack);
    }

    #[test]
    fn right_value_mirrors_left(spec in any_spec(), w in window()) {
        let mirrored = weno_core::kernel::reconstruct_left(&reverse(&w), &spec, 1e-40);
        prop_assert_eq!(reconstruct_right(&w, &spec, 1e-40), mirrored);
    }

    #[test]
    fn single_function_maps_never_reorder(w in prop::array::uniform3(0.0f64..1.0), mop in any::<bool>()) {
        let total: f64 = w.iter().sum::<f64>() + 1e-3;
        let omega = w.map(|x| (x + 1e-3 / 3.0) / total);
        let spec = if mop { MappingSpec::mop_default() } else { MappingSpec::Js };
        let m = apply_mapping(&omega, &spec);
        prop_assert_eq!(is_nonop_instance(&omega, &m.alpha, NONOP_TOLERANCE), None);
    }

    #[test]
    fn probe_ignores_order_of_equal_substencils(a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let c = 1.0 - a.min(1.0 - b) - b;
        let w = [a.min(1.0 - b), b, c];
        let p = probe_row("x", w);
        let q = probe_row("x", [w[1], w[0], w[2]]);
        prop_assert!((p.u - q.u).abs() <= 1e-15);
        prop_assert!((p.err - (1.0 - p.u).abs()).abs() <= 1e-15);
    }

    #[test]
    fn csv_rows_round_trip(rows in prop::collection::vec((any::<f64>(), any::<f64>()), 0..20)) {
        let rows: Vec<Sample1D> = rows
            .into_iter()
            .filter(|(x, u)| x.is_finite() && u.is_finite())
            .map(|(x, u)| Sample1D { x, u })
            .collect();
        let mut buf = Vec::new();
        write_records(&mut buf, &rows).unwrap();
        let back: Vec<Sample1D> = read_records(buf.as_slice()).unwrap();
        prop_assert_eq!(back, rows);
    }

    #[test]
    fn trace_rows_round_trip(t in 0.0f64..1e3, x in -1.0f64..1.0, s in 0usize..3, omega in 0.0f64..1.0) {
        let rows = vec![TraceRecord { t, x, s, omega, g: omega * omega }];
        let mut buf = Vec::new();
        write_records(&mut buf, &rows).unwrap();
        let back: Vec<TraceRecord> = read_records(buf.as_slice()).unwrap();
        prop_assert_eq!(back, rows);
    }

    #[test]
    fn config_text_round_trips(
        p in 0usize..PROBLEM_NAMES.len(),
        mask in 1u8..64,
        eps in 1e-40f64..1e-3,
        t_end in prop::option::of(0.0f64..10.0),
        cfl in prop::option::of(0.01f64..0.9),
    ) {
        let schemes: Vec<&str> = (0..6).filter(|i| mask & (1 << i) != 0).map(|i| SCHEME_NAMES[i]).collect();
        let mut cfg = RunConfig::new(PROBLEM_NAMES[p], &schemes).unwrap();
        cfg.eps = eps;
        cfg.t_end = t_end;
        cfg.cfl = cfl;
        cfg.validate().unwrap();
        prop_assert_eq!(parse_config(&cfg.to_text()).unwrap(), cfg);
    }
}
