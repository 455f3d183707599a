//! Scratch harness for exploring fixture trap dynamics. Not part of the
//! shipped suite; run with `cargo test --test tuning -- --nocapture --ignored`.

use errorfloor::decoder::{Correction, Decoder};
use errorfloor::fixtures::*;
use errorfloor::postprocess::{run_post_process, PostProcessConfig, PpMethod};
use errorfloor::quant::Dyadic;

fn corrections() -> Vec<(&'static str, Correction)> {
    vec![
        ("norm75", Correction::Normalization(Dyadic::new(3, 2))),
        ("offset1", Correction::Offset(1)),
        ("none", Correction::None),
    ]
}

/// Returns (trapped_with_pinned_support, pp_resolved_correct).
fn run_trap(scenario: &TrapScenario, pp: &PostProcessConfig) -> (bool, bool) {
    let dec = Decoder::new(&scenario.code, scenario.config).unwrap();
    let res = dec.decode(&scenario.priors).unwrap();
    if res.converged {
        return (false, false);
    }
    let support: Vec<usize> = res
        .hard_decisions
        .iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .map(|(i, _)| i)
        .collect();
    let pinned = support == scenario.support;
    let mut state = res.state;
    let out = run_post_process(&dec, &mut state, pp).unwrap();
    let correct = out.hard_decisions.iter().all(|&b| b == 0);
    (pinned, out.resolved && correct)
}

#[test]
#[ignore]
fn explore_type_i() {
    for (cname, corr) in corrections() {
        for sup in [-3i32, -4, -5, -6, -7, -8] {
            for a0 in [0i32, 1] {
                let mut sc = type_i_scenario();
                sc.config.correction = corr;
                for &b in &sc.support {
                    sc.priors[b] = sup;
                }
                let quench = PostProcessConfig::quenching(a0, 20);
                let (trapped, ok) = run_trap(&sc, &quench);
                if trapped {
                    let marker = if ok { "  <<< RESOLVED" } else { "" };
                    println!("typeI {cname} prior={sup} A0={a0}: trapped quench_ok={ok}{marker}");
                }
            }
        }
    }
}

#[test]
#[ignore]
fn explore_type_ii() {
    for (cname, corr) in corrections() {
        for outer in [-3i32, -4, -5, -6, -7] {
            for inner in [0i32, -1, -2, -3, -4, -5] {
                for a0 in [0i32, 1] {
                    let mut sc = type_ii_scenario();
                    sc.config.correction = corr;
                    for b in 0..6 {
                        sc.priors[b] = outer;
                    }
                    for &b in &TYPE_II_INNER {
                        sc.priors[b] = inner;
                    }
                    let quench = PostProcessConfig::quenching(a0, 20);
                    let eh = PostProcessConfig::extended_heating(10, a0, 20);
                    let (t1, q_ok) = run_trap(&sc, &quench);
                    let (_, e_ok) = run_trap(&sc, &eh);
                    if t1 && !q_ok && e_ok {
                        println!(
                            "typeII {cname} outer={outer} inner={inner} A0={a0}: TARGET quench=false eh=true"
                        );
                    } else if t1 {
                        println!(
                            "typeII {cname} outer={outer} inner={inner} A0={a0}: trapped quench={q_ok} eh={e_ok}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
#[ignore]
fn explore_type_iii() {
    for (cname, corr) in corrections() {
        for plural in [-6i32, -7, -8] {
            for singular in [-3i32, -4, -5, -6] {
                for (a0, b0) in [(1i32, 3i32), (0, 3), (1, 1), (0, 1)] {
                    let mut sc = type_iii_scenario();
                    sc.config.correction = corr;
                    for &b in &TYPE_III_PLURAL {
                        sc.priors[b] = plural;
                    }
                    for b in [1usize, 2, 4, 5] {
                        sc.priors[b] = singular;
                    }
                    let quench = PostProcessConfig::quenching(a0, 20);
                    let mut combined = PostProcessConfig::defaults(PpMethod::Combined);
                    combined.reweight_magnitude = a0;
                    combined.flip_magnitude = b0;
                    let (t, q_ok) = run_trap(&sc, &quench);
                    let (_, c_ok) = run_trap(&sc, &combined);
                    if t && c_ok {
                        println!(
                            "typeIII {cname} plural={plural} singular={singular} A0={a0} B0={b0}: TARGET quench={q_ok} combined=true"
                        );
                    } else if t {
                        println!(
                            "typeIII {cname} plural={plural} singular={singular} A0={a0} B0={b0}: trapped quench={q_ok} combined={c_ok}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
#[ignore]
fn diagnose_type_iii() {
    for plural in [-5i32, -6, -7, -8] {
        for singular in [-4i32, -5, -6, -7, -8] {
            let mut sc = type_iii_scenario();
            for &b in &TYPE_III_PLURAL {
                sc.priors[b] = plural;
            }
            for b in [1usize, 2, 4, 5] {
                sc.priors[b] = singular;
            }
            let dec = Decoder::new(&sc.code, sc.config).unwrap();
            let res = dec.decode(&sc.priors).unwrap();
            let support: Vec<usize> = res
                .hard_decisions
                .iter()
                .enumerate()
                .filter(|(_, &b)| b == 1)
                .map(|(i, _)| i)
                .collect();
            println!(
                "typeIII diag plural={plural} singular={singular}: converged={} iters={} support={support:?}",
                res.converged, res.iterations_used
            );
        }
    }
}
