mod common;

use common::limits;
use fraccomp::hypergraph::{
    same_incidence, verify_alpha_beta, verify_chain, verify_hypergraph_complementation, Hypergraph, ParamKind,
};
use fraccomp::ratlp::Rational;
use num_traits::One;
use proptest::prelude::*;

fn hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n, 1..=max_m).prop_flat_map(|(n, m)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), n), m).prop_map(move |rows| {
            let edges = rows
                .into_iter()
                .map(|r| r.into_iter().enumerate().filter(|(_, b)| *b).map(|(v, _)| v).collect())
                .collect();
            Hypergraph::new(n, edges).unwrap()
        })
    })
}

fn int(k: usize) -> Rational {
    Rational::from_integer((k as i64).into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn dual_and_complement_are_involutions(h in hypergraph(7, 7)) {
        prop_assert!(same_incidence(&h.dual().dual(), &h));
        prop_assert!(same_incidence(&h.complement().complement(), &h));
        prop_assert_eq!(h.dual().dual().incidence_matrix(), h.incidence_matrix());
    }

    #[test]
    fn dual_commutes_with_complement(h in hypergraph(7, 7)) {
        prop_assert_eq!(h.dual().complement().incidence_matrix(), h.complement().dual().incidence_matrix());
    }

    #[test]
    fn lp_duality_of_parameters(h in hypergraph(6, 6)) {
        let f = h.classify();
        if !f.has_isolated_vertex {
            prop_assert_eq!(h.fractional_param(ParamKind::Covering).unwrap(), h.fractional_param(ParamKind::Packing).unwrap());
        }
        if !f.has_empty_edge {
            prop_assert_eq!(h.fractional_param(ParamKind::Matching).unwrap(), h.fractional_param(ParamKind::Transversal).unwrap());
        }
    }

    #[test]
    fn covering_strictness(h in hypergraph(6, 6)) {
        let f = h.classify();
        if !f.has_isolated_vertex {
            let k_f = h.fractional_param(ParamKind::Covering).unwrap();
            prop_assert!(k_f >= Rational::one());
            prop_assert_eq!(k_f > Rational::one(), !f.has_complete_edge);
        }
    }

    #[test]
    fn integer_fractional_sandwich(h in hypergraph(6, 6)) {
        let lim = limits();
        if !h.classify().has_isolated_vertex {
            let p = h.integer_param(ParamKind::Packing, &lim).unwrap();
            let k = h.integer_param(ParamKind::Covering, &lim).unwrap();
            prop_assert!(int(p) <= h.fractional_param(ParamKind::Packing).unwrap());
            prop_assert!(h.fractional_param(ParamKind::Covering).unwrap() <= int(k));
        }
        if !h.classify().has_empty_edge {
            let mu = h.integer_param(ParamKind::Matching, &lim).unwrap();
            let tau = h.integer_param(ParamKind::Transversal, &lim).unwrap();
            prop_assert!(int(mu) <= h.fractional_param(ParamKind::Matching).unwrap());
            prop_assert!(h.fractional_param(ParamKind::Transversal).unwrap() <= int(tau));
        }
    }

    #[test]
    fn rho_tilde_of_dual(h in hypergraph(6, 6)) {
        let (d, c) = (h.dual(), h.complement());
        for t in 1u32..1 << h.num_vertices() {
            let t = common::mask_members(t, h.num_vertices());
            prop_assert_eq!(d.rho_tilde(&t), t.len() - c.rho(&t));
        }
    }

    #[test]
    fn complementation_corollary(h in hypergraph(6, 6)) {
        if h.classify().nontrivial {
            let r = verify_hypergraph_complementation(&h).unwrap();
            prop_assert!(r.all_defined_hold());
            prop_assert!(r.get(ParamKind::Covering).is_some() && r.get(ParamKind::Packing).is_some());
        }
    }

    #[test]
    fn parameter_chain(h in hypergraph(6, 6)) {
        if !h.classify().has_isolated_vertex {
            let r = verify_chain(&h, &limits()).unwrap();
            prop_assert!(r.holds(), "{:?}", r);
        }
    }

    #[test]
    fn alpha_beta_identity(h in hypergraph(6, 6)) {
        if h.classify().nontrivial {
            let r = verify_alpha_beta(&h, &limits()).unwrap();
            prop_assert!(r.holds, "{:?}", r);
        }
    }
}
