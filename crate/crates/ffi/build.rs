fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").unwrap();
    let mut config = cbindgen::Config::default();
    config.language = cbindgen::Language::C;
    config.header = Some("/* C ABI for latticelab. Generated; do not edit. */".to_string());
    config.include_guard = Some("LATTICELAB_H".to_string());
    config.cpp_compat = true;
    config.documentation = true;
    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("header generation failed")
        .write_to_file(format!("{crate_dir}/include/latticelab.h"));
    println!("cargo:rerun-if-changed=src/lib.rs");
}
