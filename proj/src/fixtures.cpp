#include "cyclebal/fixtures.hpp"

#include <sstream>

#include "cyclebal/edge_list_io.hpp"

namespace cyclebal::fixtures {

namespace {

constexpr std::string_view kTriad = R"(a b +1
b c +1
a c -1
)";

constexpr std::string_view kGama = R"(Gavev Kotun 1
Gavev Alika -1
Gavev Ukudz -1
Gavev Uheto -1
Gavev Nagam 1
Kotun Gahuk -1
Kotun Ukudz -1
Kotun Kohik -1
Kotun Geham -1
Kotun Uheto -1
Kotun Seuve -1
Kotun Nagam 1
Kotun Gama 1
Ove Alika 1
Ove Gahuk 1
Ove Masil 1
Ove Ukudz 1
Ove Notoh -1
Ove Geham 1
Ove Asaro 1
Ove Uheto -1
Ove Seuve -1
Ove Nagam -1
Alika Masil 1
Alika Ukudz 1
Alika Asaro 1
Alika Seuve -1
Nagad Notoh 1
Nagad Kohik 1
Nagad Geham -1
Gahuk Masil 1
Gahuk Ukudz 1
Gahuk Asaro 1
Gahuk Uheto -1
Gahuk Gama -1
Masil Ukudz 1
Masil Geham 1
Masil Asaro 1
Ukudz Kohik -1
Ukudz Asaro 1
Ukudz Uheto -1
Ukudz Seuve -1
Notoh Kohik 1
Notoh Geham -1
Notoh Uheto 1
Notoh Seuve 1
Notoh Nagam -1
Kohik Geham -1
Kohik Asaro -1
Kohik Uheto 1
Kohik Seuve 1
Geham Nagam -1
Asaro Seuve -1
Asaro Nagam -1
Uheto Seuve 1
Uheto Nagam -1
Seuve Gama -1
Nagam Gama 1
)";

SignedDigraph load_undirected(std::string_view text) {
    std::istringstream in{std::string(text)};
    LoadOptions opts;
    opts.undirected = true;
    return load_edge_list(in, opts);
}

}  // namespace

std::string_view triad_edge_list() { return kTriad; }
SignedDigraph triad() { return load_undirected(kTriad); }

std::string_view gahuku_gama_edge_list() { return kGama; }
SignedDigraph gahuku_gama() { return load_undirected(kGama); }

}  // namespace cyclebal::fixtures
