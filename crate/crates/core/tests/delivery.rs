mod common;

use lmdim::delivery::{
    assign_codes, build_customer_graph, codebook_document, validate_codebook, Customer, CustomerRoster, EdgeOrigin,
    GeodesicRule,
};
use lmdim::{all_pairs_distances, metric_dimension, Error, Graph, Weight};
use proptest::prelude::*;
use proptest::sample::{subsequence, Index};

const NAMES: &[&str] = &[
    "Ahmadi", "arnold", "Berg", "Brandt", "Costa", "Åberg", "ålund", "Dvořák", "Eze", "Fox",
];

fn roster() -> impl Strategy<Value = CustomerRoster> {
    (2usize..=9).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            proptest::collection::vec(any::<Index>(), n - 1),
            proptest::collection::vec(proptest::bool::weighted(0.25), pairs),
            proptest::collection::vec(1u8..=4, n - 1 + pairs),
            subsequence((0..n).collect::<Vec<_>>(), 1..=n),
            proptest::collection::vec(any::<Index>(), n),
        )
            .prop_map(move |(parents, extra, weights, locations, names)| {
                let mut edges: Vec<(usize, usize)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.index(i + 1), i + 1))
                    .collect();
                let mut k = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if extra[k] && !edges.contains(&(a, b)) {
                            edges.push((a, b));
                        }
                        k += 1;
                    }
                }
                let w: Vec<Weight> = edges
                    .iter()
                    .zip(&weights)
                    .map(|(_, &x)| Weight::Finite(f64::from(x) / 2.0))
                    .collect();
                let ambient = Graph::with_weights(n, &edges, &w).unwrap();
                let customers = locations
                    .iter()
                    .zip(&names)
                    .map(|(&loc, name)| Customer {
                        id: format!("c{loc}"),
                        family_name: NAMES[name.index(NAMES.len())].to_string(),
                        location: loc,
                    })
                    .collect();
                CustomerRoster::new(ambient, customers).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn codebook_invariants(roster in roster(), all in any::<bool>()) {
        let rule = if all { GeodesicRule::All } else { GeodesicRule::Any };
        let cg = match build_customer_graph(&roster, rule) {
            Ok(cg) => cg,
            Err(Error::DisconnectedResult) if all => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        for (i, &(a, b)) in cg.graph.edges().iter().enumerate() {
            let same_letter = cg.customers[a].letter() == cg.customers[b].letter();
            let finite = cg.graph.weight(i).is_finite();
            match cg.origins[i] {
                EdgeOrigin::NameOnly => prop_assert!(same_letter && !finite),
                EdgeOrigin::Both => prop_assert!(same_letter && finite),
                EdgeOrigin::Geodesic => prop_assert!(!same_letter && finite),
            }
        }
        let dm = all_pairs_distances(&cg.graph);
        prop_assert_eq!(all_pairs_distances(&cg.without_name_only_edges().unwrap()), dm.clone());

        let book = assign_codes(&cg).unwrap();
        let report = validate_codebook(&cg, &book).unwrap();
        prop_assert!(report.passed, "{:?}", report.failures);
        prop_assert!(book.basis.len() <= metric_dimension(&cg.graph).unwrap().value.max(1));
        for &(a, b) in cg.graph.edges() {
            prop_assert!(book.codes[a].representation.differs_from(&book.codes[b].representation));
        }
        let doc = serde_json::to_value(codebook_document(&cg, &book, &report)).unwrap();
        prop_assert_eq!(doc["codes"].as_object().unwrap().len(), cg.customers.len());
    }

    #[test]
    fn any_rule_is_always_connected(roster in roster()) {
        prop_assert!(build_customer_graph(&roster, GeodesicRule::Any).is_ok());
    }

    #[test]
    fn all_rule_keeps_a_subset_of_route_edges(roster in roster()) {
        let any = build_customer_graph(&roster, GeodesicRule::Any).unwrap();
        if let Ok(all) = build_customer_graph(&roster, GeodesicRule::All) {
            for (i, &(a, b)) in all.graph.edges().iter().enumerate() {
                if all.origins[i] != EdgeOrigin::NameOnly {
                    prop_assert!(matches!(any.origin(a, b), Some(EdgeOrigin::Geodesic | EdgeOrigin::Both)));
                }
            }
        }
    }
}

#[test]
fn grid_plan_fixture() {
    let roster = CustomerRoster::from_json(&common::fixture("grid_plan.json")).unwrap();
    assert_eq!(roster.customers.len(), 20);
    let cg = build_customer_graph(&roster, GeodesicRule::Any).unwrap();
    assert!(cg.graph.is_bipartite());
    let by_id = |id: &str| cg.customers.iter().position(|c| c.id == id).unwrap();
    assert_eq!(cg.origin(by_id("c00"), by_id("c03")), Some(EdgeOrigin::NameOnly));
    assert_eq!(cg.origin(by_id("c06"), by_id("c17")), Some(EdgeOrigin::NameOnly));
    assert_eq!(cg.origin(by_id("c13"), by_id("c14")), Some(EdgeOrigin::Both));

    let book = assign_codes(&cg).unwrap();
    let report = validate_codebook(&cg, &book).unwrap();
    assert!(report.passed);
    assert_eq!(
        (report.dimension_comparison.local, report.dimension_comparison.metric),
        (1, 2)
    );
    assert_eq!(book.codes[by_id("c18")].letter, "Ó");

    let all = build_customer_graph(&roster, GeodesicRule::All).unwrap();
    assert_eq!(all.graph, cg.graph);
}

#[test]
fn roster_errors() {
    let bad = r#"{"ambient":{"n":2,"edges":[[0,1]]},"customers":[{"id":"a","family_name":"X","location":5}]}"#;
    assert!(matches!(
        CustomerRoster::from_json(bad),
        Err(Error::UnknownVertex { .. })
    ));
    let dup = r#"{"ambient":{"n":2,"edges":[[0,1]]},"customers":[
        {"id":"a","family_name":"X","location":0},{"id":"b","family_name":"Y","location":0}]}"#;
    assert!(matches!(
        CustomerRoster::from_json(dup),
        Err(Error::DuplicateLocation(..))
    ));
    let empty = r#"{"ambient":{"n":2,"edges":[[0,1]]},"customers":[{"id":"a","family_name":" ","location":0}]}"#;
    assert!(matches!(
        CustomerRoster::from_json(empty),
        Err(Error::EmptyFamilyName(_))
    ));
}
