// Regenerates the shipped instance files under data/. Run from the repo
// root: build/tools/mkdata
#include <fstream>
#include <iostream>

#include "outcat/bratteli.hpp"
#include "outcat/instances.hpp"
#include "outcat/matcat.hpp"

using namespace outcat;

namespace {

void write(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
    std::cout << path << "\n";
}

BratteliDiagram stationary_diagram(long long base, long long mult, int levels) {
    BratteliDiagram d;
    long long v = base;
    for (int i = 0; i < levels; ++i) {
        d.levels.push_back(AlgebraObject({v}));
        if (i + 1 < levels) {
            IntMatrix m(1, 1);
            m.at(0, 0) = mult;
            d.steps.push_back(m);
            v *= mult;
        }
    }
    IntMatrix s(1, 1);
    s.at(0, 0) = mult;
    d.stationary = s;
    return d;
}

BratteliDiagram fibonacci_diagram(int levels) {
    IntMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 0;
    BratteliDiagram d;
    std::vector<long long> v{1, 1};
    for (int i = 0; i < levels; ++i) {
        d.levels.push_back(AlgebraObject(v));
        if (i + 1 < levels) {
            d.steps.push_back(m);
            v = m.apply(v);
        }
    }
    d.stationary = m;
    return d;
}

} // namespace

int main() {
    write("data/diagrams/car2.json", save_diagram_json(stationary_diagram(1, 2, 6)));
    write("data/diagrams/car3.json", save_diagram_json(stationary_diagram(1, 3, 6)));
    write("data/diagrams/car4.json", save_diagram_json(stationary_diagram(1, 4, 6)));
    write("data/diagrams/fibonacci.json", save_diagram_json(fibonacci_diagram(6)));

    {
        IntMatrix m(2, 1);
        m.at(0, 0) = 1;
        m.at(1, 0) = 2;
        write("data/morphisms/f_2_to_2_4.json",
              save_morphism_json(MultiplicityMorphism(AlgebraObject({2}), AlgebraObject({2, 4}), m)));
    }
    {
        IntMatrix m(1, 2);
        m.at(0, 0) = 1;
        m.at(0, 1) = 1;
        write("data/morphisms/g_2_4_to_6.json",
              save_morphism_json(MultiplicityMorphism(AlgebraObject({2, 4}), AlgebraObject({6}), m)));
    }

    write("data/specs/sets_injections_3.json",
          save_category_json(*finite_sets_injections_instance(3).spec));
    write("data/specs/sets_all_maps_3.json",
          save_category_json(*finite_sets_instance(3, SetMaps::all).spec));
    write("data/specs/matcat_bound_2.json", save_category_json(*export_as_spec(2)));
    return 0;
}
