//! Demazure-Lusztig operators and line-bundle twists on Laurent polynomials.

use qhowe::abraid::{
    calibrate_dl, check_affine_relations, dl_apply, dl_apply_inverse, word_apply, BraidLetter,
    BraidWord, MultiLaurent,
};
use qhowe::qlaurent::RatFun;
use qhowe::weights::Weight;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = calibrate_dl(3)?;
    println!("calibrated: {}", p.to_json());

    let x1 = MultiLaurent::var(3, 1);
    let t = dl_apply(1, &x1, &p)?;
    println!("T_1 x1 = {t}");
    println!("T_1^-1 T_1 x1 = {}", dl_apply_inverse(1, &t, &p)?);

    let f = &(&MultiLaurent::var(3, 1) * &MultiLaurent::var(3, 2))
        + &MultiLaurent::constant(3, RatFun::from(2));
    let w = BraidWord::new(
        Weight::new(vec![1, 0, 0]),
        vec![BraidLetter::T(1), BraidLetter::Phi(2), BraidLetter::TInv(1)],
    )?;
    println!("{w} applied to {f}: {}", word_apply(&w, &f, &p)?);

    let r = check_affine_relations(3, 1, &p);
    println!(
        "groupoid relations on [-1,1]^3: {} cases, {} failures",
        r.cases.len(),
        r.failures
    );
    Ok(())
}
