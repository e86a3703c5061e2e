fn main() {
    println!("ctc: command-line interface under construction");
}
