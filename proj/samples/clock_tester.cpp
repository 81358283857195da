// Library usage without the CLI: define a requirement in code, paraphrase it,
// then test the clock against it in drive mode and in trace mode.

#include <iostream>

#include "reqpat/reqpat.hpp"

int main() {
  using namespace reqpat;

  const Suite suite = clock::builtin_suite();
  const auto names = names_from(suite);
  for (const auto& req : suite.requirements()) std::cout << render_requirement(req, names).str() << "\n";

  clock::Clock c;
  c.reset();
  // Without this establishment the response check below reports p_holds.
  std::cout << "establish midnight: " << to_string(establish(c, clock::midnight(), 2000)) << "\n";
  std::cout << "midnight -> midnight: "
            << to_string(drive_verify_response(c, clock::midnight(), clock::midnight(), 2000)) << "\n";

  // Same requirements over two recorded days. The strict response fails at
  // the final 24:00, which has no later midnight inside the recording.
  const Trace two_days = record(c, 2 * clock::kDayMinutes);
  for (const auto& req : suite.requirements())
    std::cout << req.name << " on recorded trace: " << cli::describe(check(req, two_days)) << "\n";
}
