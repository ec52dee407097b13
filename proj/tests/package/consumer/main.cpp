#include <vlang/grammar.hpp>
#include <vlang/schema.hpp>

int main() {
  auto g = vlang::ParseGrammar("grammar G { A = \"a\" x:IDENT; }");
  return vlang::DeriveSchema(g).datatypes.size() == 1 ? 0 : 1;
}
