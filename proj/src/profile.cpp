#include "hrc/profile.hpp"

#include <algorithm>
#include <cassert>

#include "hrc/error.hpp"

namespace hrc {

namespace {

std::string join_names(const std::set<std::string> &names) {
  std::string out;
  for (const std::string &n : names) {
    if (!out.empty()) out += ", ";
    out += "'" + n + "'";
  }
  return out;
}

std::set<std::string> set_union(const std::set<std::string> &a,
                                const std::set<std::string> &b) {
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::set<std::string> set_minus(const std::set<std::string> &a,
                                const std::set<std::string> &b) {
  std::set<std::string> out;
  for (const std::string &x : a)
    if (!b.count(x)) out.insert(x);
  return out;
}

std::set<std::string> set_intersect(const std::set<std::string> &a,
                                    const std::set<std::string> &b) {
  std::set<std::string> out;
  for (const std::string &x : a)
    if (b.count(x)) out.insert(x);
  return out;
}

std::set<std::string> alphabet_ports(const Alphabet &alphabet) {
  std::set<std::string> out;
  for (const PortDecl &p : alphabet.ports()) out.insert(p.name);
  return out;
}

void require_equal_profiles(const Profile &p1, const Profile &p2,
                            const char *what) {
  if (!(p1 == p2))
    fail(ErrorKind::ProfileMismatch,
         std::string(what) + " requires equal profiles");
}

}  // namespace

Profile Profile::make(std::set<std::string> visible,
                      std::set<std::string> local,
                      std::set<std::string> uncontrolled,
                      std::set<std::string> controlled) {
  std::set<std::string> vl_overlap = set_intersect(visible, local);
  if (!vl_overlap.empty())
    fail(ErrorKind::InvalidArgument,
         "ports both visible and local: " + join_names(vl_overlap));
  std::set<std::string> uc_overlap = set_intersect(uncontrolled, controlled);
  if (!uc_overlap.empty())
    fail(ErrorKind::InvalidArgument,
         "ports both uncontrolled and controlled: " + join_names(uc_overlap));
  std::set<std::string> p1 = set_union(visible, local);
  std::set<std::string> p2 = set_union(uncontrolled, controlled);
  if (p1 != p2)
    fail(ErrorKind::InvalidArgument,
         "profile partitions cover different port sets: {" + join_names(p1) +
             "} vs {" + join_names(p2) + "}");
  Profile out;
  out.visible_ = std::move(visible);
  out.local_ = std::move(local);
  out.uncontrolled_ = std::move(uncontrolled);
  out.controlled_ = std::move(controlled);
  return out;
}

std::set<std::string> Profile::ports() const {
  return set_union(visible_, local_);
}

Profile Profile::without(const std::set<std::string> &ports) const {
  return make(set_minus(visible_, ports), set_minus(local_, ports),
              set_minus(uncontrolled_, ports), set_minus(controlled_, ports));
}

ProfiledImplementation::ProfiledImplementation(Profile profile,
                                               Assertion behavior)
    : profile_(std::move(profile)), behavior_(std::move(behavior)) {}

ProfiledImplementation ProfiledImplementation::make(Profile profile,
                                                    Assertion behavior) {
  if (alphabet_ports(behavior.alphabet()) != profile.ports())
    fail(ErrorKind::InvalidArgument,
         "behavior alphabet does not match the profile's port set");
  if (!behavior.is_receptive(profile.uncontrolled()))
    fail(ErrorKind::NotReceptive,
         "behavior is not receptive to the uncontrolled ports {" +
             join_names(profile.uncontrolled()) + "}");
  return ProfiledImplementation(std::move(profile), std::move(behavior));
}

ProfiledContract::ProfiledContract(Profile profile, Contract contract)
    : profile_(std::move(profile)), contract_(std::move(contract)) {}

ProfiledContract ProfiledContract::make(Profile profile,
                                        const Assertion &assumption,
                                        const Assertion &promise) {
  return make(std::move(profile), Contract::make(assumption, promise));
}

ProfiledContract ProfiledContract::make(Profile profile,
                                        const Contract &contract) {
  if (alphabet_ports(contract.alphabet()) != profile.ports())
    fail(ErrorKind::InvalidArgument,
         "contract alphabet does not match the profile's port set");
  return ProfiledContract(std::move(profile), contract.canonicalized());
}

bool refines(const ProfiledImplementation &m,
             const ProfiledImplementation &m_prime) {
  return m.profile() == m_prime.profile() &&
         m.behavior().is_subset(m_prime.behavior());
}

ProfiledImplementation compose(const ProfiledImplementation &m1,
                               const ProfiledImplementation &m2) {
  const Profile &p1 = m1.profile();
  const Profile &p2 = m2.profile();
  std::set<std::string> local_clash = set_intersect(p1.local(), p2.local());
  if (!local_clash.empty())
    fail(ErrorKind::CompositionClash,
         "local ports owned by both implementations: " +
             join_names(local_clash));
  std::set<std::string> ctrl_clash =
      set_intersect(p1.controlled(), p2.controlled());
  if (!ctrl_clash.empty())
    fail(ErrorKind::CompositionClash,
         "controlled ports owned by both implementations: " +
             join_names(ctrl_clash));

  std::set<std::string> controlled =
      set_union(p1.controlled(), p2.controlled());
  Profile profile = Profile::make(
      set_union(p1.visible(), p2.visible()), set_union(p1.local(), p2.local()),
      set_minus(set_union(p1.uncontrolled(), p2.uncontrolled()), controlled),
      controlled);
  return ProfiledImplementation::make(std::move(profile),
                                      m1.behavior().intersect(m2.behavior()));
}

bool is_consistent(const ProfiledContract &c) {
  return c.promise().is_receptive(c.profile().uncontrolled());
}

bool is_compatible(const ProfiledContract &c) {
  return c.assumption().is_receptive(c.profile().controlled());
}

bool satisfies(const ProfiledImplementation &m, const ProfiledContract &c) {
  return m.profile() == c.profile() && m.behavior().is_subset(c.promise());
}

bool dominates(const ProfiledContract &c, const ProfiledContract &c_prime) {
  return c.profile() == c_prime.profile() &&
         dominates(c.contract(), c_prime.contract());
}

ProfiledContract meet(const ProfiledContract &c1, const ProfiledContract &c2) {
  require_equal_profiles(c1.profile(), c2.profile(), "meet");
  return ProfiledContract::make(c1.profile(),
                                meet(c1.contract(), c2.contract()));
}

ProfiledContract join(const ProfiledContract &c1, const ProfiledContract &c2) {
  require_equal_profiles(c1.profile(), c2.profile(), "join");
  return ProfiledContract::make(c1.profile(),
                                join(c1.contract(), c2.contract()));
}

ProfiledContract complement_contract(const ProfiledContract &c) {
  return ProfiledContract::make(c.profile(),
                                complement_contract(c.contract()));
}

ProfiledContract compose(const ProfiledContract &c1,
                         const ProfiledContract &c2) {
  const Profile &p1 = c1.profile();
  const Profile &p2 = c2.profile();
  // Contracts with one and the same profile are viewpoints of a single
  // component; they compose freely (the composite keeps that profile).
  // Responsibility for a controlled port clashes only across distinct
  // profiles.
  if (!(p1 == p2)) {
    std::set<std::string> ctrl_clash =
        set_intersect(p1.controlled(), p2.controlled());
    if (!ctrl_clash.empty())
      fail(ErrorKind::CompositionClash,
           "controlled ports owned by both contracts: " +
               join_names(ctrl_clash));
  }

  std::set<std::string> visible = set_union(p1.visible(), p2.visible());
  std::set<std::string> controlled =
      set_union(p1.controlled(), p2.controlled());
  Profile profile = Profile::make(
      visible, set_minus(set_union(p1.local(), p2.local()), visible),
      set_minus(set_union(p1.uncontrolled(), p2.uncontrolled()), controlled),
      controlled);
  return ProfiledContract::make(std::move(profile),
                                compose(c1.contract(), c2.contract()));
}

bool are_compatible(const ProfiledContract &c1, const ProfiledContract &c2) {
  ProfiledContract joint = compose(c1, c2);
  return joint.assumption().is_receptive(joint.profile().controlled());
}

namespace {

ProfiledContract eliminate_profiled(const ProfiledContract &c,
                                    const std::set<std::string> &ports) {
  std::set<std::string> present =
      set_intersect(ports, alphabet_ports(c.contract().alphabet()));
  return ProfiledContract::make(c.profile().without(present),
                                eliminate(c.contract(), present));
}

}  // namespace

ProfiledContract fuse(const std::vector<ProfiledContract> &contracts,
                      const std::set<std::string> &ports,
                      std::size_t max_contracts) {
  if (contracts.empty())
    fail(ErrorKind::InvalidArgument, "fusion requires at least one contract");
  if (contracts.size() > max_contracts || contracts.size() > 63)
    fail(ErrorKind::FusionCapExceeded,
         "fusion of " + std::to_string(contracts.size()) +
             " contracts exceeds the cap of " +
             std::to_string(std::min<std::size_t>(max_contracts, 63)));
  std::set<std::string> all_ports;
  for (const ProfiledContract &c : contracts) {
    std::set<std::string> p = c.profile().ports();
    all_ports.insert(p.begin(), p.end());
  }
  std::set<std::string> stray = set_minus(ports, all_ports);
  if (!stray.empty())
    fail(ErrorKind::UnknownName,
         "fusion ports not found in any contract: " + join_names(stray));

  bool have_result = false;
  ProfiledContract result;
  const std::uint64_t n = contracts.size();
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    bool have_term = false;
    ProfiledContract composite;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (!(mask & (1ull << i))) continue;
      composite = have_term ? compose(composite, contracts[i]) : contracts[i];
      have_term = true;
    }
    ProfiledContract term = eliminate_profiled(composite, ports);
    if (have_result) {
      require_equal_profiles(result.profile(), term.profile(), "fusion meet");
      result = meet(result, term);
    } else {
      result = term;
      have_result = true;
    }
  }
  return result;
}

}  // namespace hrc
