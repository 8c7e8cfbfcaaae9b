use meadow_core::presentations::{
    flatten, md_d, md_rd, md_rd_chain, standard_symbols, visible_models_check, FiniteStructure,
    OpSymbol,
};
use meadow_core::semantics::{check_axioms, zp_meadow, FiniteMeadow};
use meadow_core::{PresentationId, SignatureId};

fn reduct(m: &FiniteMeadow, sig: SignatureId) -> FiniteStructure {
    let full = FiniteStructure::from_meadow(m);
    standard_symbols(sig)
        .into_iter()
        .fold(FiniteStructure::new(m.size()), |s, sym| {
            let table = full.table(&sym).unwrap().to_vec();
            s.with_op(sym, table)
        })
}

#[test]
fn reduced_divisive_reducts_expand_uniquely() {
    for p in [2, 3] {
        let m = zp_meadow(p).unwrap();
        assert!(check_axioms(&m, PresentationId::Rd).is_empty(), "Z_{p} fails E_rd");
        let s = reduct(&m, SignatureId::Rd);
        let report = visible_models_check(&md_rd(), &s).unwrap();
        assert!(report.unique(), "Z_{p}");
        let e = report.expansion().unwrap();
        let full = FiniteStructure::from_meadow(&m);
        for sym in ["0", "+", "*", "neg", "inv"] {
            let key = e.keys().find(|k| k.name == sym).unwrap();
            assert_eq!(Some(e[key].as_slice()), full.table(key), "Z_{p}: {sym}");
        }
    }
}

#[test]
fn chain_signatures_shrink_step_by_step() {
    let names = |p: &meadow_core::presentations::Presentation| -> Vec<String> {
        p.visible.iter().map(|s| s.name.clone()).collect()
    };
    let [rd1, rd2, rd3, rd] = md_rd_chain();
    assert_eq!(names(&rd1), ["+", "/", "0", "1", "neg"]);
    assert_eq!(names(&rd2), ["+", "-", "/", "0", "1"]);
    assert_eq!(names(&rd3), ["-", "/", "0", "1"]);
    assert_eq!(names(&rd), ["-", "/", "1"]);
    assert_eq!(rd.axioms.len(), 12);
}

#[test]
fn flattened_expression_matches_constructor() {
    let text = "hide(0, hide(+, hide(neg, combine(hide(*, Md_d), <x - y = x + (-y)>))))";
    let p = flatten(text).unwrap();
    assert!(p.equivalent(&md_rd()));
    let d = flatten("hide(inv, combine(imd, <x / y = x * y^-1>))").unwrap();
    assert!(d.equivalent(&md_d()));
    assert!(d.hidden.contains(&OpSymbol::new("inv", 1)));
}

#[test]
fn wrong_division_is_rejected() {
    // Z_5 with division replaced by multiplication.
    let m = zp_meadow(5).unwrap();
    let full = FiniteStructure::from_meadow(&m);
    let mut s = reduct(&m, SignatureId::Dmd);
    let mul = full.table(&OpSymbol::new("*", 2)).unwrap().to_vec();
    s = s.with_op(OpSymbol::new("/", 2), mul);
    assert!(!visible_models_check(&md_d(), &s).unwrap().satisfiable());
}
