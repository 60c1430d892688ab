use anticyclotomic::bigfloat::*;
fn main() {
    let p = 128u32;
    let i = BigComplex::new(BigFloat::zero(p), BigFloat::from_i64(1, p));
    let inv = i.inv();
    println!("inv(i) = {} + {} i", inv.re.to_f64(), inv.im.to_f64());
    let d = i.abs_sq();
    println!("abs_sq = {} mag2={}", d.to_f64(), d.mag2());
    let neg = i.im.neg();
    println!("neg = {}", neg.to_f64());
    let q = neg.div(&d);
    println!("q = {}", q.to_f64());
}
