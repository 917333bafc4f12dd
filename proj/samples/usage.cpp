// Classify a code, build its loop, and find the minimal representations of
// the same loop.

#include <iostream>

#include "loopforge/code_io.hpp"
#include "loopforge/code_loop.hpp"
#include "loopforge/render.hpp"
#include "loopforge/repsolver.hpp"

using namespace loopforge;

int main() {
  const auto basis = parse_code(
      "m=19 n=4\n"
      "1-8\n"
      "1,4,9-14\n"
      "1,2,3,5,6,7,9-13,15-19\n"
      "2,3,15,16\n");

  const auto cv = char_vector_of(basis);
  const auto canon = canonicalize(cv);
  std::cout << "lambda " << format_char_vector_full(cv) << " -> " << canon.id.to_string() << '\n';

  const CodeLoop loop(basis);
  std::cout << "order " << loop.order() << ", moufang " << loop.is_moufang() << ", center " << loop.center().size()
            << '\n';

  const auto report = minimal_representations(canon.representative);
  std::cout << "minimal degree " << report.degree << " (this code has " << basis.length() << ")\n";
  for (const auto& rep : report.representations) {
    std::cout << rep.type().to_string() << '\n' << serialize_generators(rep.basis);
    std::cout << render_classes(rep.basis, RenderStyle::Ascii);
  }
}
