use rug::{Integer, Rational};
use std::time::Instant;

fn main() {
    // small rational ops (1kbit-ish denominators), like MC with random 64-bit-grid probabilities
    let mut a = Rational::from((Integer::from(12345u64) << 500, Integer::from(98765u64) << 490));
    let b = Rational::from((3u64, 7u64));
    let t = Instant::now();
    for _ in 0..1_000_000 {
        let c = Rational::from(&a * &b);
        a = c + &b;
        a = a.recip();
    }
    println!("1kbit mul+add+rec x1M: {:?}", t.elapsed());

    // big: 250kbit denominators gcd-heavy adds
    let big1 = Integer::from(Integer::u_pow_u(3, 150_000));
    let big2 = Integer::from(Integer::u_pow_u(5, 110_000));
    let x = Rational::from((Integer::from(7), big1));
    let y = Rational::from((Integer::from(11), big2));
    let t = Instant::now();
    let mut acc = Rational::new();
    for _ in 0..100 {
        acc += Rational::from(&x + &y);
    }
    println!("250kbit add x100: {:?} (per op {:?})", t.elapsed(), t.elapsed() / 100);

    let t = Instant::now();
    for _ in 0..100 {
        let _ = Rational::from(&x * &y);
    }
    println!("250kbit mul x100: {:?}", t.elapsed());
}
