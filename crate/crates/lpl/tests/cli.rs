use std::path::PathBuf;
use std::process::{Command, Output};

const THREE_WAY: &str = "pi[A](x:A + pi[A](y:A + z:A) + z:A)";

fn lpl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpl")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn program(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "programs", name].iter().collect();
    p.to_str().unwrap().to_owned()
}

#[test]
fn check_prints_the_canonical_type() {
    let o = lpl(&["check", "\\x:A&B. x"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), ": (A & B -> A) & (A & B -> B)\n");
}

#[test]
fn check_reports_type_errors() {
    let o = lpl(&["check", "pi[A](x:A)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NotAConjunctionContaining"));
    assert!(stderr(&o).contains("pi[A](x:A)"));
}

#[test]
fn check_reports_parse_errors() {
    let o = lpl(&["check", "\\x:A. )"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error: 1:"), "{}", stderr(&o));
    assert_eq!(lpl(&["check", "x"]).status.code(), Some(3));
    assert_eq!(lpl(&["check", "def t = x:A;"]).status.code(), Some(3));
}

#[test]
fn equiv_answers() {
    let o = lpl(&["equiv", "A->(B&C)", "(A->B)&(A->C)"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "yes\n"));
    let o = lpl(&["equiv", "(A&B)->C", "A->B->C"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "no\n"));
    assert_eq!(lpl(&["equiv", "A", "A"]).status.code(), Some(0));
    assert_eq!(lpl(&["equiv", "A ->", "A"]).status.code(), Some(3));
}

#[test]
fn reduce_all_lists_every_normal_form() {
    let o = lpl(&["reduce", "--all", THREE_WAY]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x:A\ny:A\nz:A\n");
}

#[test]
fn reduce_takes_the_first_candidate_and_says_so() {
    let o = lpl(&["reduce", THREE_WAY]);
    assert_eq!(stdout(&o), "x:A\n");
    assert!(stderr(&o).contains("several candidates"));
    let o = lpl(&["reduce", &program("first.lpl")]);
    assert_eq!(stdout(&o), "r:A\n");
    assert!(stderr(&o).is_empty());
}

#[test]
fn reduce_with_no_budget_truncates() {
    let o = lpl(&["reduce", "--max-steps", "0", "(\\x:A. x) y:A"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("Truncated"));
    let o = lpl(&["reduce", "--all", "--max-steps", "0", "(\\x:A. x) y:A"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn dist_prints_exact_probabilities() {
    let o = lpl(&["dist", THREE_WAY]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/3\tx:A\n1/6\ty:A\n1/2\tz:A\nresidual\t0\n");
    let o = lpl(&["dist", "x:A"]);
    assert_eq!(stdout(&o), "1\tx:A\nresidual\t0\n");
}

#[test]
fn dist_strategies() {
    let lo = lpl(&["dist", "--strategy", "lo", THREE_WAY]);
    let inner = lpl(&["dist", "--strategy", "in", THREE_WAY]);
    assert_eq!(stdout(&lo), stdout(&inner));
    let o = lpl(&["dist", "--compare", THREE_WAY]);
    assert!(stdout(&o).ends_with("# strategies lo, in agree\n"));
    let o = lpl(&["dist", "--compare", "--weighting", "distinct", "--strategy", "in", THREE_WAY]);
    assert!(stdout(&o).starts_with("5/12\tx:A\n"), "{}", stdout(&o));
    assert!(stdout(&o).contains("# in 5/12 vs lo 1/3\tx:A"), "{}", stdout(&o));
}

#[test]
fn dist_budget_goes_to_the_residual() {
    let o = lpl(&["dist", "--max-steps", "1", THREE_WAY]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(stdout(&o), "1/3\tx:A\n1/3\tz:A\nresidual\t1/3\n");
}

#[test]
fn dist_marks_stuck_forms() {
    let o = lpl(&["dist", "pi[A](r:A&B)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "# stuck\t1\tpi[A](r:A & B)\nresidual\t1\n");
}

#[test]
fn programs_from_files() {
    let o = lpl(&["reduce", "--all", &program("booleans.lpl")]);
    assert_eq!(stdout(&o), "(\\x:A. \\y:B. y) + (\\x:A. \\y:B. x)\n");
    let o = lpl(&["dist", &program("choice.lpl")]);
    assert_eq!(stdout(&o), "1/3\tx:A\n1/6\ty:A\n1/2\tz:A\nresidual\t0\n");
    let o = lpl(&["check", &program("polymorphic.lpl")]);
    assert_eq!(stdout(&o), ": A\n");
}

mod graph {
    use super::*;
    use dot_parser::{ast, canonical};

    fn parse(dot: &str) -> canonical::Graph<(ast::ID<'_>, ast::ID<'_>)> {
        let ast = ast::Graph::try_from(dot).expect("valid DOT");
        canonical::Graph::from(ast)
    }

    fn labels(dot: &str) -> Vec<String> {
        parse(dot)
            .edges
            .set
            .iter()
            .flat_map(|e| e.attr.elems.iter().cloned().map(|(k, v)| (Into::<String>::into(k), Into::<String>::into(v))))
            .filter(|(k, _)| k == "label")
            .map(|(_, v)| v)
            .collect()
    }

    #[test]
    fn three_way_choice() {
        let o = lpl(&["graph", THREE_WAY]);
        assert_eq!(o.status.code(), Some(0));
        let dot = stdout(&o);
        let g = parse(&dot);
        assert_eq!(g.nodes.set.len(), 5);
        assert_eq!(g.edges.set.len(), 5);
        let mut l = labels(&dot);
        l.sort();
        assert_eq!(l, ["pi 1/2", "pi 1/2", "pi 1/3", "pi 1/3", "pi 1/3"]);
        assert_eq!(dot, stdout(&lpl(&["graph", THREE_WAY])));
    }

    #[test]
    fn full_congruence() {
        let dot = stdout(&lpl(&["graph", "--full", THREE_WAY]));
        let g = parse(&dot);
        assert_eq!((g.nodes.set.len(), g.edges.set.len()), (7, 12));
    }

    #[test]
    fn normal_form_and_beta() {
        let dot = stdout(&lpl(&["graph", "x:A"]));
        let g = parse(&dot);
        assert_eq!((g.nodes.set.len(), g.edges.set.len()), (1, 0));
        let dot = stdout(&lpl(&["graph", "(\\x:A. x) y:A"]));
        assert_eq!(labels(&dot), ["beta"]);
        let dot = stdout(&lpl(&["graph", "(/\\X. \\x:X. x) {A}"]));
        assert_eq!(labels(&dot), ["tbeta"]);
    }

    #[test]
    fn node_budget() {
        let o = lpl(&["graph", "--max-nodes", "2", THREE_WAY]);
        assert_eq!(o.status.code(), Some(4));
        assert_eq!(parse(&stdout(&o)).nodes.set.len(), 2);
    }
}
