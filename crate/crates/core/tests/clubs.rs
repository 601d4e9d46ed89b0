use clubcomb::finord::{self, Club, FinFun};

const MAX: usize = 3;

fn functions() -> Vec<FinFun> {
    let mut out = Vec::new();
    for m in 0..=MAX {
        for n in 0..=MAX {
            out.extend(FinFun::all(m, n));
        }
    }
    out
}

fn ks_of_len(len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=MAX).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn every_club_contains_identities() {
    for club in Club::ALL {
        for n in 0..=4 {
            assert!(club.contains(&FinFun::identity(n)), "{club} misses 1_{n}");
        }
    }
}

#[test]
fn closed_under_composition() {
    let fs = functions();
    for club in Club::ALL {
        let members: Vec<&FinFun> = fs.iter().filter(|f| club.contains(f)).collect();
        for f in &members {
            for g in members.iter().filter(|g| g.dom() == f.cod()) {
                let h = finord::compose(g, f).unwrap();
                assert!(club.contains(&h), "{club}: {g} after {f} escapes");
            }
        }
    }
}

#[test]
fn closed_under_sum() {
    let fs = functions();
    for club in Club::ALL {
        let members: Vec<&FinFun> = fs.iter().filter(|f| club.contains(f)).collect();
        for a in &members {
            for b in &members {
                let s = finord::sum(a, b);
                assert!(club.contains(&s), "{club}: {a} + {b} escapes");
            }
        }
    }
}

// Thickening two lines that merge interleaves their strands, so the
// monotone clubs that admit merging are only closed under wreath when no
// merged point is thickened past width one. Every other club is closed.
fn wreath_breaks_monotonicity(a: &FinFun, ks: &[usize]) -> bool {
    let t = a.table();
    (1..t.len()).any(|j| t[j - 1] == t[j] && ks[t[j] - 1] >= 2)
}

#[test]
fn closed_under_wreath() {
    let fs = functions();
    for club in Club::ALL {
        let monotone_merging = matches!(club, Club::Msrj | Club::Mfun);
        for a in fs.iter().filter(|f| club.contains(f)) {
            for ks in ks_of_len(a.cod()) {
                let w = finord::wreath(a, &ks).unwrap();
                assert_eq!(w.dom(), a.table().iter().map(|&j| ks[j - 1]).sum::<usize>());
                assert_eq!(w.cod(), ks.iter().sum::<usize>());
                let expected = !(monotone_merging && wreath_breaks_monotonicity(a, &ks));
                assert_eq!(club.contains(&w), expected, "{club}: {a} wreath {ks:?} = {w}");
            }
        }
    }
}

#[test]
fn merge_thickened_interleaves() {
    let merge: FinFun = "2->1:[1,1]".parse().unwrap();
    let w = finord::wreath(&merge, &[2]).unwrap();
    assert_eq!(w, "4->2:[1,2,1,2]".parse().unwrap());
    assert_eq!(finord::minimal_club(&w), Club::Srj);
}

#[test]
fn wreath_of_bijection_by_equal_widths_is_bijective() {
    for a in functions().iter().filter(|f| Club::Bij.contains(f)) {
        for k in 0..=MAX {
            let w = finord::wreath(a, &vec![k; a.cod()]).unwrap();
            assert!(Club::Bij.contains(&w), "{a} wreath {k}s");
        }
    }
}

#[test]
fn wreath_by_ones_is_identity_operation() {
    for a in functions() {
        let ones = vec![1; a.cod()];
        assert_eq!(finord::wreath(&a, &ones).unwrap(), a);
    }
}

#[test]
fn lattice_order_matches_inclusion() {
    let fs = functions();
    for c in Club::ALL {
        for d in Club::ALL {
            let included = fs.iter().all(|f| !c.contains(f) || d.contains(f));
            assert_eq!(c.leq(d), included, "{c} <= {d}");
        }
    }
}

#[test]
fn minimal_club_is_least() {
    for f in functions() {
        let m = finord::minimal_club(&f);
        assert!(m.contains(&f));
        for c in Club::ALL.into_iter().filter(|c| c.contains(&f)) {
            assert!(m.leq(c), "{f}: {m} is not below {c}");
        }
    }
}

#[test]
fn bases_grow_with_the_lattice() {
    for c in Club::ALL {
        for d in Club::ALL.into_iter().filter(|d| c.leq(*d)) {
            assert!(c.basis().iter().all(|p| d.basis().contains(p)), "{c} <= {d}");
        }
    }
}

#[test]
fn club_names_roundtrip() {
    for c in Club::ALL {
        assert_eq!(c.to_string().parse::<Club>().unwrap(), c);
        assert_eq!(c.name().to_lowercase().parse::<Club>().unwrap(), c);
    }
}
