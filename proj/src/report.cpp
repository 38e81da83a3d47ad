#include "qsdl/report.hpp"

#include <sstream>

namespace qsdl {

std::string EliminationReport::text() const {
  std::ostringstream os;
  os << "# " << label << '\n';
  for (const auto &[name, value] : bounds) os << "bound\t" << name << '\t' << value << '\n';
  for (const auto &it : items) os << "item\t" << it << '\n';
  for (const auto &r : rejected) os << "rejected\t" << r.item << '\t' << r.reason << '\n';
  for (const auto &c : survivors)
    os << "survivor\t" << tuple_str(c) << '\t' << c.status
       << (c.reason.empty() ? "" : "\t" + c.reason) << '\n';
  if (survivors.empty()) os << "survivors\tnone\n";
  return os.str();
}

}  // namespace qsdl
