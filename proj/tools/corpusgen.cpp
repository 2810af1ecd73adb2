// Regenerates the data/ tree: one JSON file per corpus algebra (with its
// standard modules embedded), one deliberately broken variant for exit-code
// tests, and a few malformed files exercising the parser diagnostics.

#include "weakhopf/io.hpp"
#include "weakhopf/weakhopf.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

using namespace weakhopf;

static AlgebraSpec spec_of(const std::string& name, const WeakBimonoid& B) {
    AlgebraSpec spec;
    spec.name = name;
    spec.dim = B.dim;
    spec.mu = B.mu;
    spec.eta = B.eta;
    spec.delta = B.delta;
    spec.eps = B.eps;
    if (B.has_custom_braid()) spec.braid = B.braid();
    spec.meta.emplace_back("name", name);
    return spec;
}

static void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        std::exit(1);
    }
    out << text;
    std::cout << "wrote " << path.string() << "\n";
}

int main(int argc, char** argv) {
    std::filesystem::path root = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(root / "algebras");
    std::filesystem::create_directories(root / "invalid");

    for (const auto& entry : corpus()) {
        AlgebraSpec spec = spec_of(entry.name, entry.algebra);
        for (const auto& [mname, mod] : standard_modules(entry))
            spec.modules.emplace_back(mname, ModuleSpec{mod.carrier, mod.action});
        write_file(root / "algebras" / (entry.name + ".json"), serialize_algebra_text(spec));
    }

    // A single-entry perturbation of the two-point algebra that breaks the
    // weak unit squares: used by the exit-code contract tests.
    for (const auto& entry : corpus())
        if (entry.name == "two_points") {
            WeakBimonoid broken = mutate(entry.algebra, "weak_unit");
            AlgebraSpec spec = spec_of("two_points_broken_unit", broken);
            write_file(root / "algebras" / "two_points_broken_unit.json",
                       serialize_algebra_text(spec));
        }

    write_file(root / "invalid" / "bad_syntax.json",
               "{\"tensor_order\": \"left-major\", \"dim\": 2\n");
    write_file(root / "invalid" / "bad_shape.json", R"({
  "tensor_order": "left-major",
  "dim": 2,
  "mu": [["1", "0", "0", "0"]],
  "eta": ["1", "1"],
  "delta": [["1", "0"], ["0", "0"], ["0", "0"], ["0", "1"]],
  "eps": ["1", "1"]
}
)");
    write_file(root / "invalid" / "bad_tensor_order.json", R"({
  "tensor_order": "right-major",
  "dim": 1,
  "mu": [["1"]],
  "eta": ["1"],
  "delta": [["1"]],
  "eps": ["1"]
}
)");
    return 0;
}
