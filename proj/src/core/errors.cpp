#include "tlagauge/errors.hpp"

namespace tlagauge {

void throw_domain(const std::string& what) { throw DomainError(what); }
void throw_validation(const std::string& what) { throw ValidationError(what); }
void throw_configuration(const std::string& what) { throw ConfigurationError(what); }

} // namespace tlagauge
