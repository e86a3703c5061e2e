fn main() {
    println!("ctc-datagen: data generator under construction");
}
