use proptest::prelude::*;

use wreathmac::cli::{Command, Request};
use wreathmac::exactalg::{CycPoly, LaurentPoly2, RatFn2, Vars};
use wreathmac::partcomb::{kappa_bar, quot_core, tau, AffineWeylElt, Partition};
use wreathmac::quiverref::r_star;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..6, 0..6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v)
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2), 0..4).prop_map(|terms| {
        terms.into_iter().fold(LaurentPoly2::zero(), |acc, (c, a, b)| acc + &LaurentPoly2::mono(a, b, Vars::QT) * &LaurentPoly2::from_int(c))
    })
}

fn ratfn() -> impl Strategy<Value = RatFn2> {
    (laurent(), laurent()).prop_filter_map("zero denominator", |(n, d)| {
        let d = d + LaurentPoly2::from_int(1);
        (!d.is_zero()).then(|| RatFn2::from(n) / RatFn2::from(d))
    })
}

fn weyl(r: usize) -> impl Strategy<Value = AffineWeylElt> {
    (prop::collection::vec(0..r, 0..7), prop::collection::vec(-2i64..=2, r - 1)).prop_map(move |(word, t)| {
        let mut text: Vec<String> = word.iter().map(|i| format!("s{i}")).collect();
        let last = -t.iter().sum::<i64>();
        let coords: Vec<String> = t.iter().chain([&last]).map(i64::to_string).collect();
        text.push(format!("t[{}]", coords.join(",")));
        AffineWeylElt::parse(r, &text.join(" ")).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quot_core_roundtrip(mu in partition(), r in 2usize..5) {
        let (quot, core, _) = quot_core(&mu, r);
        prop_assert!(core.is_core(r));
        prop_assert_eq!(core.size() + r * quot.size(), mu.size());
        prop_assert_eq!(tau(&quot, &kappa_bar(&mu, r)), mu);
    }

    #[test]
    fn weyl_render_parse(w in weyl(3)) {
        prop_assert_eq!(AffineWeylElt::parse(3, &w.render()).unwrap(), w);
    }

    #[test]
    fn request_render_parse(r in 1usize..5, jobs in prop::option::of(1usize..8), w in weyl(3)) {
        let mut req = Request::new(Command::Kostka);
        req.r = Some(r);
        req.w = Some(w.render());
        req.mu = Some("[[1],[],[]]".into());
        req.jobs = jobs;
        prop_assert_eq!(Request::parse_args(req.render()).unwrap(), req);
    }

    #[test]
    fn ratfn_field_laws(a in ratfn(), b in ratfn(), c in ratfn()) {
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!((a.clone() - b.clone()) + b.clone(), a.clone());
        if !b.is_zero() {
            prop_assert_eq!((a.clone() / b.clone()) * b.clone(), a.clone());
            prop_assert_eq!(b.inv().unwrap().inv().unwrap(), b);
        }
    }

    #[test]
    fn reflection_braid_and_quadratic(coeffs in prop::collection::vec(laurent(), 3), i in 0usize..3) {
        let f = CycPoly::from_coeffs(coeffs);
        let j = (i + 1) % 3;
        prop_assert_eq!(r_star(i, &r_star(j, &r_star(i, &f))), r_star(j, &r_star(i, &r_star(j, &f))));
        // (R*_i - 1)(R*_i + (qt)^-1) = 0
        let c = LaurentPoly2::mono(-1, -1, Vars::QT);
        let (once, twice) = (r_star(i, &f), r_star(i, &r_star(i, &f)));
        prop_assert_eq!(&twice + &once.scale(&c), &once + &f.scale(&c));
    }
}
