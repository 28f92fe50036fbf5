//! The hand-derived worked examples, one check per example.

use std::sync::Arc;

use regchains::arith::{parse_poly, pseudo_divide, Field, Poly, Ring, Var};
use regchains::decompose::{
    clean_chain, extend, intersect, intersect_algebraic, intersect_free, regular_gcd, regularize, triangularize, Pairs,
    SolveOptions,
};
use regchains::rchain::{is_regular, iterated_resultant, prem_chain, RegularChain, TriangularSet};
use regchains::squarefree::{squarefree_attach, squarefree_chain, squarefree_with_src};
use regchains::subres::matrix::determinant_polynomial;
use regchains::subres::{resultant, squarefree_part, subresultant_chain};
use regchains::verify::{check_decomposition, enumerate_variety, quasi_component_points, radical_membership};

pub type Check = Result<(), String>;

pub struct Golden {
    pub name: &'static str,
    pub run: fn() -> Check,
}

fn yx() -> Arc<Ring> {
    Ring::new(&["y", "x"], Field::rationals()).unwrap()
}

fn p(r: &Arc<Ring>, s: &str) -> Poly {
    parse_poly(r, s).unwrap()
}

fn chain(r: &Arc<Ring>, polys: &[&str]) -> RegularChain {
    RegularChain::from_polys(r, polys.iter().map(|s| p(r, s)).collect()).unwrap()
}

fn expect<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn rendered(chains: &[RegularChain]) -> Vec<String> {
    chains.iter().map(|c| c.to_string()).collect()
}

fn chains_eq(got: &[RegularChain], want: Vec<RegularChain>) -> Check {
    let mut want = want;
    want.sort();
    expect(rendered(got), rendered(&want))
}

fn pairs_eq(got: Pairs, want: Pairs) -> Check {
    let show = |v: &Pairs| v.iter().map(|(g, c)| format!("({g}, {c})")).collect::<Vec<_>>();
    expect(show(&got), show(&want))
}

fn same_up_to_scalar(a: &Poly, b: &Poly) -> Check {
    expect(a.normalize_unit().to_string(), b.normalize_unit().to_string())
}

pub fn all() -> Vec<Golden> {
    vec![
        Golden {
            name: "evaluation over GF(3)",
            run: evaluation,
        },
        Golden {
            name: "pseudo-division identity",
            run: pseudo_division,
        },
        Golden {
            name: "determinant polynomial",
            run: dpol,
        },
        Golden {
            name: "subresultant chains",
            run: subresultants,
        },
        Golden {
            name: "resultants",
            run: resultants,
        },
        Golden {
            name: "squarefree part",
            run: sqf_part,
        },
        Golden {
            name: "reduction by a triangular set",
            run: reduction,
        },
        Golden {
            name: "iterated resultants",
            run: iterated,
        },
        Golden {
            name: "regularity test",
            run: regularity,
        },
        Golden {
            name: "decomposition of x*y",
            run: decompose_xy,
        },
        Golden {
            name: "circle and line",
            run: circle_line,
        },
        Golden {
            name: "intersect x*y with the empty chain",
            run: intersect_xy,
        },
        Golden {
            name: "regular gcds",
            run: regular_gcds,
        },
        Golden {
            name: "regularize over y^2 - y",
            run: regularize_split,
        },
        Golden {
            name: "intersect with a free variable",
            run: free,
        },
        Golden {
            name: "intersect with an algebraic variable",
            run: algebraic,
        },
        Golden {
            name: "clean chain",
            run: clean,
        },
        Golden {
            name: "extend",
            run: extend_examples,
        },
        Golden {
            name: "squarefree attach",
            run: sqf_attach,
        },
        Golden {
            name: "squarefree attach from a subresultant chain",
            run: sqf_src,
        },
        Golden {
            name: "squarefree chain",
            run: sqf_chain,
        },
        Golden {
            name: "variety enumeration",
            run: variety,
        },
        Golden {
            name: "quasi-component enumeration",
            run: quasi_component,
        },
        Golden {
            name: "decomposition checks",
            run: decomposition_checks,
        },
        Golden {
            name: "radical membership",
            run: radical,
        },
        Golden {
            name: "solve command",
            run: solve_command,
        },
        Golden {
            name: "bench command",
            run: bench_command,
        },
    ]
}

fn evaluation() -> Check {
    let r = Ring::new(&["y", "x"], Field::prime(3).unwrap()).unwrap();
    let f = r.field();
    let v = p(&r, "x^2 + y").eval(&[f.from_i64(2), f.from_i64(1)]).unwrap();
    expect(f.is_zero(&v), true)
}

fn pseudo_division() -> Check {
    let r = yx();
    let (a, b) = (p(&r, "x^2"), p(&r, "2*x + 1"));
    let d = pseudo_divide(&a, &b, Var(1)).unwrap();
    expect(
        (d.quotient.clone(), d.remainder.clone(), d.power),
        (p(&r, "2*x - 1"), p(&r, "1"), 2),
    )?;
    expect(&p(&r, "4") * &a, &(&b * &d.quotient) + &d.remainder)
}

fn dpol() -> Check {
    let r = Ring::new(&["v"], Field::rationals()).unwrap();
    let c = |k| Poly::from_i64(&r, k);
    let m = vec![vec![c(1), c(0), c(1)], vec![c(1), c(0), c(-1)]];
    expect(determinant_polynomial(&r, &m, Var(0)).unwrap(), c(-2))
}

fn subresultants() -> Check {
    let r = yx();
    let x = Var(1);
    let s = subresultant_chain(&p(&r, "x^2 + 1"), &p(&r, "x^2 - 1"), x).unwrap();
    let want = ["4", "-2", "x^2 - 1", "x^2 + 1"].map(|e| p(&r, e)).to_vec();
    expect(s.entries.clone(), want)?;
    expect(s.principal(1).is_zero(), true)?;
    let s = subresultant_chain(&p(&r, "x^2 - 1"), &p(&r, "x - 1"), x).unwrap();
    expect((s.entry(0).clone(), s.entry(1).clone()), (p(&r, "0"), p(&r, "x - 1")))?;
    let s = subresultant_chain(&p(&r, "y*x + 1"), &p(&r, "y*x - 1"), x).unwrap();
    expect(s.resultant().clone(), p(&r, "-2*y"))
}

fn resultants() -> Check {
    let r = yx();
    let x = Var(1);
    expect(resultant(&p(&r, "x"), &p(&r, "x - 1"), x).unwrap(), p(&r, "-1"))?;
    expect(resultant(&p(&r, "x^2 + 1"), &p(&r, "x^2 - 1"), x).unwrap(), p(&r, "4"))
}

fn sqf_part() -> Check {
    let r = yx();
    same_up_to_scalar(
        &squarefree_part(&p(&r, "(x - y)^2*(x + y)")).unwrap(),
        &p(&r, "x^2 - y^2"),
    )
}

fn reduction() -> Check {
    let r = yx();
    let t = |s: &str| TriangularSet::new(&r, vec![p(&r, s)]).unwrap();
    expect(prem_chain(&p(&r, "y*x + 1"), &t("y")), p(&r, "1"))?;
    expect(prem_chain(&p(&r, "x^2 - y^2"), &t("y - 1")), p(&r, "x^2 - 1"))
}

fn iterated() -> Check {
    let r = yx();
    expect(iterated_resultant(&p(&r, "x"), &chain(&r, &["x^2 - 2"])), p(&r, "-2"))?;
    let t = TriangularSet::new(&r, vec![p(&r, "x^2 - y"), p(&r, "y^2 - 1")]).unwrap();
    let c = iterated_resultant(&p(&r, "y*x"), &t);
    expect(c.is_constant() && !c.is_zero(), true)?;
    expect(c.normalize_unit(), p(&r, "1"))
}

fn regularity() -> Check {
    let r = yx();
    expect(is_regular(&p(&r, "x"), &chain(&r, &["x^2 - 2"])), true)?;
    expect(is_regular(&p(&r, "x"), &chain(&r, &["x^2 - x"])), false)
}

fn decompose_xy() -> Check {
    let r = yx();
    let out = triangularize(&r, &[p(&r, "x*y")], &SolveOptions::lazard()).unwrap();
    chains_eq(out.chains(), vec![chain(&r, &["x*y"]), chain(&r, &["y"])])
}

fn circle_line() -> Check {
    let r = yx();
    let f = [p(&r, "x^2 + y^2 - 1"), p(&r, "x - y")];
    let out = triangularize(&r, &f, &SolveOptions::lazard()).unwrap();
    chains_eq(out.chains(), vec![chain(&r, &["2*y^2 - 1", "x - y"])])
}

fn intersect_xy() -> Check {
    let r = yx();
    let out = intersect(&p(&r, "x*y"), &RegularChain::empty(&r), None).unwrap();
    chains_eq(out.chains(), vec![chain(&r, &["x*y"]), chain(&r, &["y"])])
}

fn regular_gcds() -> Check {
    let r = yx();
    let x = Var(1);
    let gcd = |a: &str, b: &str, t: &RegularChain| {
        let (a, b) = (p(&r, a), p(&r, b));
        let src = subresultant_chain(&a, &b, x).unwrap();
        regular_gcd(&a, &b, x, &src, t).unwrap()
    };
    let empty = RegularChain::empty(&r);
    pairs_eq(gcd("x^2 - 1", "x - 1", &empty), vec![(p(&r, "x - 1"), empty.clone())])?;
    let t = chain(&r, &["y^2 - y"]);
    pairs_eq(gcd("x - y", "x^2 - x", &t), vec![(p(&r, "x - y"), t.clone())])?;
    pairs_eq(
        gcd("x^2 - 1", "x^2 + (y - 1)*x - y", &chain(&r, &["y^2 - 1"])),
        vec![
            (p(&r, "(y - 1)*(x - 1)"), chain(&r, &["y + 1"])),
            (p(&r, "x^2 + (y - 1)*x - y"), chain(&r, &["y - 1"])),
        ],
    )
}

fn regularize_split() -> Check {
    let r = yx();
    pairs_eq(
        regularize(&p(&r, "y"), &chain(&r, &["y^2 - y"])).unwrap(),
        vec![(p(&r, "0"), chain(&r, &["y"])), (p(&r, "y"), chain(&r, &["y - 1"]))],
    )?;
    let t = chain(&r, &["x^2 - 2"]);
    pairs_eq(regularize(&p(&r, "x"), &t).unwrap(), vec![(p(&r, "x"), t.clone())])
}

fn free() -> Check {
    let r = yx();
    let x = Var(1);
    let out = intersect_free(&p(&r, "x^2 + y"), x, &RegularChain::empty(&r)).unwrap();
    chains_eq(out.chains(), vec![chain(&r, &["x^2 + y"])])?;
    let out = intersect_free(&p(&r, "y*x + 1"), x, &chain(&r, &["y"])).unwrap();
    chains_eq(out.chains(), vec![])?;
    let out = intersect_free(&p(&r, "y*x + 1"), x, &chain(&r, &["y - 1"])).unwrap();
    chains_eq(out.chains(), vec![chain(&r, &["y - 1", "y*x + 1"])])
}

fn algebraic() -> Check {
    let r = yx();
    let x = Var(1);
    let run = |q: &str, tx: &str, c: &str| {
        let t = chain(&r, &[c, tx]);
        let q = p(&r, q);
        let src = subresultant_chain(&q, t.get(x).unwrap(), x).unwrap();
        intersect_algebraic(&q, &t, x, &src, &chain(&r, &[c])).unwrap()
    };
    let out = run("x - y", "x^2 - x", "y^2 - y");
    chains_eq(out.chains(), vec![chain(&r, &["y^2 - y", "x - y"])])?;
    let out = run("x^2 - 1", "x^2 + (y - 1)*x - y", "y^2 - 1");
    chains_eq(
        out.chains(),
        vec![
            chain(&r, &["y + 1", "(y - 1)*(x - 1)"]),
            chain(&r, &["y - 1", "x^2 + (y - 1)*x - y"]),
        ],
    )
}

fn clean() -> Check {
    let r = yx();
    let out = clean_chain(&chain(&r, &["y"]), &chain(&r, &["y*x + 1"]), Var(1)).unwrap();
    chains_eq(out.chains(), vec![])
}

fn extend_examples() -> Check {
    let r = yx();
    let x = Var(1);
    // only the part below x is required to be regular here
    let t = RegularChain::from_polys_unchecked(&r, vec![p(&r, "y^2 - y"), p(&r, "y*x + 1")]).unwrap();
    let out = extend(&chain(&r, &["y - 1"]), &t, x).unwrap();
    chains_eq(out.chains(), vec![chain(&r, &["y - 1", "y*x + 1"])])?;
    let out = extend(&chain(&r, &["y"]), &t, x).unwrap();
    chains_eq(out.chains(), vec![])
}

// The branch over y = 0 is written {y, x}: primitive forms are printed, so
// the 2x of the hand trace appears as x.
fn sqf_attach() -> Check {
    let r = yx();
    let x = Var(1);
    let out = squarefree_attach(&p(&r, "x^3 - x^2 - x + 1"), x, &RegularChain::empty(&r)).unwrap();
    chains_eq(out.chains(), vec![chain(&r, &["x^2 - 1"])])?;
    let out = squarefree_attach(&p(&r, "x^2 - y"), x, &chain(&r, &["y^2 - y"])).unwrap();
    chains_eq(
        out.chains(),
        vec![chain(&r, &["y - 1", "x^2 - y"]), chain(&r, &["y", "x"])],
    )
}

fn sqf_src() -> Check {
    let r = yx();
    let x = Var(1);
    let q = p(&r, "x^2 - 1");
    let src = subresultant_chain(&q, &q.derivative(x), x).unwrap();
    expect(src.resultant().clone(), p(&r, "-4"))?;
    let out = squarefree_with_src(&q, x, &src, &RegularChain::empty(&r)).unwrap();
    chains_eq(out.chains(), vec![chain(&r, &["x^2 - 1"])])?;
    let q = p(&r, "x^2 - y");
    let src = subresultant_chain(&q, &q.derivative(x), x).unwrap();
    let out = squarefree_with_src(&q, x, &src, &chain(&r, &["y^2 - y"])).unwrap();
    chains_eq(
        out.chains(),
        vec![chain(&r, &["y - 1", "x^2 - y"]), chain(&r, &["y", "x"])],
    )
}

fn sqf_chain() -> Check {
    let r = yx();
    chains_eq(
        squarefree_chain(&chain(&r, &["x^2"])).unwrap().chains(),
        vec![chain(&r, &["x"])],
    )?;
    let out = squarefree_chain(&chain(&r, &["y^2 - y", "x^2 - y"])).unwrap();
    chains_eq(
        out.chains(),
        vec![chain(&r, &["y - 1", "x^2 - y"]), chain(&r, &["y", "x"])],
    )
}

fn points(v: &[[u64; 2]]) -> Vec<Vec<u64>> {
    v.iter().map(|a| a.to_vec()).collect()
}

fn variety() -> Check {
    let r = Ring::new(&["y", "x"], Field::prime(3).unwrap()).unwrap();
    let s = enumerate_variety(&r, &[p(&r, "x^2 + y")], 3).unwrap();
    expect(s.points.into_iter().collect(), points(&[[0, 0], [2, 1], [2, 2]]))
}

fn quasi_component() -> Check {
    let r = Ring::new(&["y", "x"], Field::prime(3).unwrap()).unwrap();
    let s = quasi_component_points(&chain(&r, &["x*y"]), 3).unwrap();
    expect(s.points.into_iter().collect(), points(&[[1, 0], [2, 0]]))
}

fn decomposition_checks() -> Check {
    let mode = SolveOptions::lazard().mode;
    let r3 = Ring::new(&["y", "x"], Field::prime(3).unwrap()).unwrap();
    let rep = check_decomposition(
        &r3,
        &[p(&r3, "x*y")],
        &[chain(&r3, &["x*y"]), chain(&r3, &["y"])],
        mode,
        3,
    )
    .unwrap();
    expect((rep.passed, rep.expected_points, rep.covered_points), (true, 5, 5))?;
    let r = yx();
    let f = [p(&r, "x^2 + y^2 - 1"), p(&r, "x - y")];
    let rep = check_decomposition(&r, &f, &[chain(&r, &["2*y^2 - 1", "x - y"])], mode, 7).unwrap();
    expect((rep.passed, rep.expected_points), (true, 2))?;
    let r7 = r.with_field(Field::prime(7).unwrap());
    let pts = enumerate_variety(&r7, &[p(&r7, "x^2 + y^2 - 1"), p(&r7, "x - y")], 7).unwrap();
    expect(pts.points.into_iter().collect(), points(&[[2, 2], [5, 5]]))
}

fn radical() -> Check {
    let r = yx();
    let t = chain(&r, &["y^2 - y"]);
    expect(radical_membership(&p(&r, "y"), &t).unwrap(), false)?;
    expect(radical_membership(&p(&r, "y*(y - 1)*(y + 2)"), &t).unwrap(), true)
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("regchains").chain(args.iter().copied());
    let code = regchains::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn write_systems(dir: &std::path::Path) {
    let systems = [
        ("xy.sys", "vars: y < x\nx*y\n"),
        ("circle-line.sys", "vars: y < x\nx^2 + y^2 - 1\nx - y\n"),
        ("parabola.sys", "vars: y < x\nx^2 + y\n"),
    ];
    for (name, text) in systems {
        std::fs::write(dir.join(name), text).unwrap();
    }
}

fn solve_command() -> Check {
    let dir = tempfile::tempdir().unwrap();
    write_systems(dir.path());
    let path = |n: &str| dir.path().join(n).to_string_lossy().into_owned();
    let (code, out) = cli(&["solve", &path("xy.sys"), "--mode", "lazard"]);
    let chains: Vec<&str> = out.lines().filter(|l| l.starts_with('[')).collect();
    expect((code, chains), (0, vec!["[y]", "[x*y]"]))?;
    let (code, _) = cli(&["solve", &path("circle-line.sys"), "--verify", "7"]);
    expect(code, 0)
}

fn bench_command() -> Check {
    let dir = tempfile::tempdir().unwrap();
    write_systems(dir.path());
    let start = std::time::Instant::now();
    let (code, out) = cli(&["bench", &dir.path().to_string_lossy(), "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    expect(code, 0)?;
    expect(rows.len(), 3)?;
    let all_timed = rows.iter().all(|r| r["time_ms"].as_f64().is_some_and(|t| t < 1000.0));
    expect(all_timed && start.elapsed().as_secs_f64() < 3.0, true)
}
