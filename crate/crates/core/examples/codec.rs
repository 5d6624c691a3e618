use simplicity::codec::{code_length, decode, encode_rank, Rank};

fn main() {
    for r in [0, 1, 2, 3, 6, 7, 14, 15, 1000] {
        let word = encode_rank(Rank(r));
        assert_eq!(decode(&word).unwrap(), Rank(r));
        println!("{r:>5} -> {:<10} {} bits", format!("\"{word}\""), code_length(Rank(r)));
    }
}
