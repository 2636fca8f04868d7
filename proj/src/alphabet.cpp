#include "hrc/alphabet.hpp"

#include <algorithm>
#include <limits>

#include "hrc/error.hpp"

namespace hrc {

struct Alphabet::Data {
  std::vector<PortDecl> ports;
  unsigned trace_length = 1;
  std::uint64_t max_universe = kDefaultUniverseCap;
  std::uint64_t universe_size = 1;
  // stride[i * L + s] is the index weight of (port i, step s)
  std::vector<std::uint64_t> strides;
  std::map<std::string, std::size_t> index_by_name;
};

namespace {

std::shared_ptr<const Alphabet::Data> build_data(std::vector<PortDecl> ports,
                                                 unsigned trace_length,
                                                 std::uint64_t max_universe) {
  if (trace_length < 1)
    fail(ErrorKind::InvalidArgument, "trace length must be at least 1");
  auto data = std::make_shared<Alphabet::Data>();
  data->trace_length = trace_length;
  data->max_universe = max_universe;
  data->ports = std::move(ports);
  for (std::size_t i = 0; i < data->ports.size(); ++i) {
    const PortDecl &p = data->ports[i];
    if (p.name.empty())
      fail(ErrorKind::InvalidArgument, "port name must be non-empty");
    if (p.domain.empty())
      fail(ErrorKind::InvalidArgument,
           "port '" + p.name + "' has an empty domain");
    for (std::size_t a = 0; a < p.domain.size(); ++a)
      for (std::size_t b = a + 1; b < p.domain.size(); ++b)
        if (p.domain[a] == p.domain[b])
          fail(ErrorKind::InvalidArgument, "port '" + p.name +
                                               "' repeats domain value '" +
                                               p.domain[a] + "'");
    if (!data->index_by_name.emplace(p.name, i).second)
      fail(ErrorKind::DuplicateName, "duplicate port name '" + p.name + "'");
  }

  // Mixed-radix weights, most significant digit first (port 0, step 0).
  std::size_t ndigits = data->ports.size() * trace_length;
  data->strides.assign(ndigits, 0);
  std::uint64_t acc = 1;
  for (std::size_t d = ndigits; d-- > 0;) {
    data->strides[d] = acc;
    std::uint64_t radix = data->ports[d / trace_length].domain.size();
    if (acc > std::numeric_limits<std::uint64_t>::max() / radix)
      fail(ErrorKind::UniverseTooLarge,
           "universe too large: run count does not fit in 64 bits");
    acc *= radix;
  }
  data->universe_size = acc;
  return data;
}

const std::shared_ptr<const Alphabet::Data> &empty_data() {
  static const std::shared_ptr<const Alphabet::Data> data =
      build_data({}, 1, kDefaultUniverseCap);
  return data;
}

}  // namespace

Alphabet::Alphabet() : data_(empty_data()) {}

Alphabet::Alphabet(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Alphabet Alphabet::make(std::vector<PortDecl> ports, unsigned trace_length,
                        std::uint64_t max_universe) {
  return Alphabet(build_data(std::move(ports), trace_length, max_universe));
}

const std::vector<PortDecl> &Alphabet::ports() const { return data_->ports; }

unsigned Alphabet::trace_length() const { return data_->trace_length; }

std::uint64_t Alphabet::universe_size() const { return data_->universe_size; }

std::uint64_t Alphabet::max_universe() const { return data_->max_universe; }

bool Alphabet::has_port(const std::string &name) const {
  return data_->index_by_name.count(name) != 0;
}

std::size_t Alphabet::port_index(const std::string &name) const {
  auto it = data_->index_by_name.find(name);
  if (it == data_->index_by_name.end())
    fail(ErrorKind::UnknownName, "unknown port '" + name + "'");
  return it->second;
}

const PortDecl &Alphabet::port(std::size_t index) const {
  return data_->ports.at(index);
}

bool Alphabet::operator==(const Alphabet &o) const {
  if (data_ == o.data_) return true;
  return data_->trace_length == o.data_->trace_length &&
         data_->ports == o.data_->ports;
}

bool Alphabet::contains(const Alphabet &sub) const {
  if (data_->trace_length != sub.data_->trace_length) return false;
  for (const PortDecl &p : sub.data_->ports) {
    auto it = data_->index_by_name.find(p.name);
    if (it == data_->index_by_name.end()) return false;
    if (data_->ports[it->second].domain != p.domain) return false;
  }
  return true;
}

unsigned Alphabet::digit(std::uint64_t run_index, std::size_t port,
                         unsigned step) const {
  std::size_t d = port * data_->trace_length + step;
  return static_cast<unsigned>((run_index / data_->strides[d]) %
                               data_->ports[port].domain.size());
}

std::uint64_t Alphabet::digit_stride(std::size_t port, unsigned step) const {
  return data_->strides[port * data_->trace_length + step];
}

Run Alphabet::run_at(std::uint64_t run_index) const {
  Run run;
  for (std::size_t i = 0; i < data_->ports.size(); ++i) {
    const PortDecl &p = data_->ports[i];
    std::vector<std::string> history(data_->trace_length);
    for (unsigned s = 0; s < data_->trace_length; ++s)
      history[s] = p.domain[digit(run_index, i, s)];
    run.values.emplace(p.name, std::move(history));
  }
  return run;
}

std::uint64_t Alphabet::index_of(const Run &run) const {
  if (run.values.size() != data_->ports.size())
    fail(ErrorKind::InvalidArgument,
         "run does not assign exactly the alphabet's ports");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < data_->ports.size(); ++i) {
    const PortDecl &p = data_->ports[i];
    auto it = run.values.find(p.name);
    if (it == run.values.end())
      fail(ErrorKind::InvalidArgument, "run lacks port '" + p.name + "'");
    const std::vector<std::string> &history = it->second;
    if (history.size() != data_->trace_length)
      fail(ErrorKind::InvalidArgument,
           "run history for port '" + p.name + "' has wrong length");
    for (unsigned s = 0; s < data_->trace_length; ++s) {
      auto v = std::find(p.domain.begin(), p.domain.end(), history[s]);
      if (v == p.domain.end())
        fail(ErrorKind::InvalidArgument, "value '" + history[s] +
                                             "' not in domain of port '" +
                                             p.name + "'");
      index += digit_stride(i, s) *
               static_cast<std::uint64_t>(v - p.domain.begin());
    }
  }
  return index;
}

Alphabet Alphabet::restricted_to(const std::set<std::string> &keep) const {
  for (const std::string &name : keep)
    if (!has_port(name)) fail(ErrorKind::UnknownName, "unknown port '" + name + "'");
  std::vector<PortDecl> ports;
  for (const PortDecl &p : data_->ports)
    if (keep.count(p.name)) ports.push_back(p);
  return make(std::move(ports), data_->trace_length, data_->max_universe);
}

Alphabet Alphabet::without_port(const std::string &name) const {
  port_index(name);  // validate
  std::vector<PortDecl> ports;
  for (const PortDecl &p : data_->ports)
    if (p.name != name) ports.push_back(p);
  return make(std::move(ports), data_->trace_length, data_->max_universe);
}

Alphabet Alphabet::union_with(const Alphabet &o) const {
  if (data_ == o.data_ || *this == o) return *this;
  if (data_->trace_length != o.data_->trace_length)
    fail(ErrorKind::DomainMismatch,
         "cannot combine alphabets with different trace lengths");
  std::vector<PortDecl> ports = data_->ports;
  for (const PortDecl &p : o.data_->ports) {
    auto it = data_->index_by_name.find(p.name);
    if (it == data_->index_by_name.end()) {
      ports.push_back(p);
    } else if (data_->ports[it->second].domain != p.domain) {
      fail(ErrorKind::DomainMismatch,
           "port '" + p.name + "' has conflicting domains");
    }
  }
  return make(std::move(ports), data_->trace_length,
              std::max(data_->max_universe, o.data_->max_universe));
}

Run project_run(const Run &run, const std::set<std::string> &ports) {
  Run out;
  for (const std::string &name : ports) {
    auto it = run.values.find(name);
    if (it == run.values.end())
      fail(ErrorKind::UnknownName, "unknown port '" + name + "'");
    out.values.emplace(name, it->second);
  }
  return out;
}

Universe::Universe(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
  if (alphabet_.universe_size() > alphabet_.max_universe())
    fail(ErrorKind::UniverseTooLarge,
         "universe too large: " + std::to_string(alphabet_.universe_size()) +
             " runs exceeds cap " + std::to_string(alphabet_.max_universe()));
}

std::uint64_t Universe::size() const { return alphabet_.universe_size(); }

Run Universe::run_at(std::uint64_t index) const {
  return alphabet_.run_at(index);
}

std::vector<Run> Universe::runs() const {
  std::vector<Run> out;
  out.reserve(size());
  for (std::uint64_t i = 0; i < size(); ++i) out.push_back(run_at(i));
  return out;
}

}  // namespace hrc
