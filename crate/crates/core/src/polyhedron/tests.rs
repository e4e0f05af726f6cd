use alloc::string::String;
use alloc::vec::Vec;

use super::*;

fn reversed_face(p: &CombPolyhedron, id: &str) -> CombPolyhedron {
    let faces = p.faces().iter().map(|(k, c)| {
        let mut c = c.clone();
        if k == id {
            c.reverse();
        }
        (k.clone(), c)
    });
    CombPolyhedron::new(faces, p.angles().iter().map(|(&e, &m)| (e, m)))
}

/// Square pyramid, apex 4-valent ideal, base edges labelled 3.
fn ideal_pyramid() -> CombPolyhedron {
    let faces: Vec<(String, Vec<VertexId>)> = [
        ("A", alloc::vec![1, 2, 3]),
        ("B", alloc::vec![1, 3, 4]),
        ("C", alloc::vec![1, 4, 5]),
        ("D", alloc::vec![1, 5, 2]),
        ("E", alloc::vec![2, 5, 4, 3]),
    ]
    .into_iter()
    .map(|(k, c)| (k.into(), c))
    .collect();
    let mut p = CombPolyhedron::with_uniform_label(faces, 2);
    for (a, b) in [(2, 3), (3, 4), (4, 5), (5, 2)] {
        p.set_label(a, b, 3).unwrap();
    }
    p
}

#[test]
fn cube_counts() {
    let r = validate(&gen_cube(2));
    assert!(r.is_valid(), "{r}");
    assert_eq!((r.vertices, r.edges, r.faces), (8, 12, 6));
    assert_eq!(r.compact_vertices, 8);
    assert!(r.is_compact());
    assert!(!r.simplex);
}

#[test]
fn simplex_and_orientation() {
    let r = validate(&gen_tetrahedron(2));
    assert!(r.simplex);
    assert!(alloc::format!("{r}").contains("simplex: Andreev theorem inapplicable"));
    let bad = validate(&reversed_face(&gen_cube(2), "F1"));
    assert!(bad.issues.iter().any(|i| matches!(i, ValidationIssue::Orientation { .. })));
    assert!(alloc::format!("{}", bad.issues[0]).contains("rotation-system"));
}

#[test]
fn missing_and_stray_labels() {
    let c = gen_cube(2);
    let mut angles: Vec<(Edge, u32)> = c.angles().iter().map(|(&e, &m)| (e, m)).collect();
    angles.remove(0);
    angles.push(((1, 8), 2));
    let p = CombPolyhedron::new(c.faces().clone(), angles);
    let r = validate(&p);
    assert!(r.issues.contains(&ValidationIssue::MissingLabel((1, 2))));
    assert!(r.issues.contains(&ValidationIssue::LabelOnNonEdge((1, 8))));
}

#[test]
fn generator_shapes() {
    for n in 5..9 {
        let r = validate(&gen_loebell(n).unwrap());
        assert!(r.is_compact(), "{r}");
        assert_eq!((r.vertices, r.edges, r.faces), (4 * n, 6 * n, 2 * n + 2));
    }
    for n in 3..9 {
        let r = validate(&gen_loebell_ideal(n).unwrap());
        assert!(r.is_valid(), "{r}");
        assert_eq!(r.ideal4_vertices, 2 * n);
        assert_eq!(r.faces, 2 * n + 2);
    }
    let oct = validate(&gen_loebell_ideal(3).unwrap());
    assert_eq!((oct.vertices, oct.edges, oct.faces), (6, 12, 8));
    assert_eq!(gen_loebell(5).unwrap(), gen_dodecahedron(2).unwrap());
    let i3 = validate(&gen_ideal3_dodecahedron());
    assert!(i3.is_valid(), "{i3}");
    assert_eq!(i3.ideal3_vertices, 1);
    assert!(gen_loebell(4).is_err());
    assert!(gen_dodecahedron(1).is_err());
    assert!(gen_lambert_cube(2, 3, 3).is_err());
}

#[test]
fn andreev_cube_fails_only_m3() {
    let r = andreev_check(&gen_cube(2)).unwrap();
    assert_eq!(r.failed(), alloc::vec![Condition::M3]);
    assert_eq!(r.get(Condition::M3).violations.len(), 3);
}

#[test]
fn andreev_families_pass() {
    for m in 2..=10 {
        let r = andreev_check(&gen_dodecahedron(m).unwrap()).unwrap();
        assert!(r.passed(), "m = {m}\n{r}");
    }
    assert!(andreev_check(&gen_ideal3_dodecahedron()).unwrap().passed());
    for n in 3..8 {
        assert!(andreev_check(&gen_loebell_ideal(n).unwrap()).unwrap().passed(), "n = {n}");
    }
    for p in 3..6 {
        for q in 3..6 {
            for r in 3..6 {
                assert!(andreev_check(&gen_lambert_cube(p, q, r).unwrap()).unwrap().passed());
            }
        }
    }
    assert!(andreev_check(&ideal_pyramid()).unwrap().passed());
}

#[test]
fn triangular_prism_m4() {
    // all right: base-lateral sum 3 fails m4; lateral 3-circuit sum 3/2 fails m2
    let r = andreev_check(&gen_prism(3, 2).unwrap()).unwrap();
    assert_eq!(r.failed(), alloc::vec![Condition::M2, Condition::M4]);
}

#[test]
fn ridges_of_marked_dodecahedron() {
    let p = gen_dodecahedron(5).unwrap();
    let ridges = find_ridges(&p).unwrap();
    assert_eq!(ridges.len(), 30);
    let (a, b) = DODECAHEDRON_MARKED_EDGE;
    for r in &ridges {
        let touches = [r.edge.0, r.edge.1].iter().any(|x| *x == a || *x == b);
        let want = if r.edge == (a, b) {
            RidgeType::new(2, 2, 5, 2, 2)
        } else if touches {
            RidgeType::new(2, 2, 2, 2, 5)
        } else {
            RidgeType::new(2, 2, 2, 2, 2)
        };
        assert_eq!(r.ty, want, "{r}");
    }
}

#[test]
fn ridges_exclude_triangles_and_ideal_endpoints() {
    let prism = gen_prism(3, 2).unwrap();
    let ridges = find_ridges(&prism).unwrap();
    let edges: Vec<Edge> = ridges.iter().map(|r| r.edge).collect();
    assert_eq!(edges, alloc::vec![(1, 4), (2, 5), (3, 6)]);

    let dinf = contract_ridge(&gen_dodecahedron(4).unwrap(), DODECAHEDRON_MARKED_EDGE).unwrap();
    let ridges = find_ridges(&dinf).unwrap();
    assert!(ridges.iter().all(|r| r.edge.0 != 1 && r.edge.1 != 1));
}

#[test]
fn contraction_of_dodecahedron() {
    for m in 2..6 {
        let d = contract_ridge(&gen_dodecahedron(m).unwrap(), DODECAHEDRON_MARKED_EDGE).unwrap();
        let r = validate(&d);
        assert_eq!((r.faces, r.vertices, r.edges), (12, 19, 29));
        assert_eq!(r.ideal4_vertices, 1);
        assert!(andreev_check(&d).unwrap().passed());
    }
    let l5 = gen_loebell(5).unwrap();
    for e in l5.edges() {
        assert!(contract_ridge(&l5, e).is_ok());
    }
}

#[test]
fn contraction_rejects_wrong_types() {
    let cube = gen_lambert_cube(3, 3, 3).unwrap();
    assert!(matches!(contract_ridge(&cube, (1, 3)), Err(PolyhedronError::NotContractible { .. })));
    let i3 = gen_ideal3_dodecahedron();
    assert!(matches!(contract_ridge(&i3, (1, 2)), Err(PolyhedronError::NotContractible { .. })));
    assert!(matches!(contract_ridge(&gen_cube(2), (1, 8)), Err(PolyhedronError::NotContractible { .. })));
}

#[test]
fn insertion_inverts_contraction() {
    let d3 = gen_dodecahedron(3).unwrap();
    let dinf = contract_ridge(&d3, DODECAHEDRON_MARKED_EDGE).unwrap();
    let back: Vec<bool> = [InsertMode::One, InsertMode::Two]
        .iter()
        .map(|&mode| match insert_edge(&dinf, 1, mode, 3) {
            Ok(q) => q.same_combinatorics(&d3),
            Err(_) => false,
        })
        .collect();
    assert_eq!(back.iter().filter(|&&b| b).count(), 1);
    let other = if back[0] { InsertMode::Two } else { InsertMode::One };
    let (n, q) = insert_edge_min_label(&dinf, 1, other, 2..=10).unwrap();
    assert!(!q.same_combinatorics(&gen_dodecahedron(n).unwrap()));
    let b = dinf.fresh_vertex_id();
    let again = contract_ridge(&q, edge_key(1, b)).unwrap();
    assert!(again.same_combinatorics(&dinf));
}

#[test]
fn insertion_reports_m2() {
    let p = ideal_pyramid();
    for mode in [InsertMode::One, InsertMode::Two] {
        for n in 2..=3 {
            match insert_edge(&p, 1, mode, n) {
                Err(PolyhedronError::AndreevFailure(r)) => assert!(r.failed().contains(&Condition::M2), "{r}"),
                other => panic!("expected failure, got {other:?}"),
            }
        }
        let (n, q) = insert_edge_min_label(&p, 1, mode, 2..=10).unwrap();
        assert_eq!(n, 4);
        assert_eq!(validate(&q).faces, 5);
    }
    assert!(matches!(insert_edge(&p, 2, InsertMode::One, 5), Err(PolyhedronError::NotIdealFourValent(2))));
}

#[test]
fn ideal_loebell_equals_sequential_contraction() {
    for n in 5..9 {
        let seq = contract_ridges(&gen_loebell(n).unwrap(), &loebell_vertical_edges(n)).unwrap();
        assert_eq!(seq, gen_loebell_ideal(n).unwrap());
    }
}

#[test]
fn coxeter_matrix_of_cube() {
    use crate::coxeter::Label;
    let m = gen_lambert_cube(3, 4, 5).unwrap().coxeter_matrix();
    assert_eq!(m.rank(), 6);
    // F1 (z0) and F2 (z1) are opposite
    assert_eq!(m.get(0, 1), Label::Infinite);
    // F1 and F3 (y0) share the edge 1-2
    assert_eq!(m.get(0, 2), Label::Finite(3));
}
