#ifndef HRC_PROFILE_HPP
#define HRC_PROFILE_HPP

#include <set>
#include <string>
#include <vector>

#include "hrc/contract.hpp"

namespace hrc {

// Double partition of a port set: visible/local and uncontrolled/controlled.
// Profiles form a flat lattice: they refine only by equality.
class Profile {
 public:
  Profile() = default;  // empty port set

  static Profile make(std::set<std::string> visible,
                      std::set<std::string> local,
                      std::set<std::string> uncontrolled,
                      std::set<std::string> controlled);

  const std::set<std::string> &visible() const { return visible_; }
  const std::set<std::string> &local() const { return local_; }
  const std::set<std::string> &uncontrolled() const { return uncontrolled_; }
  const std::set<std::string> &controlled() const { return controlled_; }
  std::set<std::string> ports() const;

  // Drop the given ports from all four partitions.
  Profile without(const std::set<std::string> &ports) const;

  bool operator==(const Profile &o) const = default;

 private:
  std::set<std::string> visible_;
  std::set<std::string> local_;
  std::set<std::string> uncontrolled_;
  std::set<std::string> controlled_;
};

// An implementation that owns its controlled ports and accepts every history
// of its uncontrolled ones: construction verifies that the behavior is
// receptive to the uncontrolled set.
class ProfiledImplementation {
 public:
  ProfiledImplementation() = default;

  static ProfiledImplementation make(Profile profile, Assertion behavior);

  const Profile &profile() const { return profile_; }
  const Assertion &behavior() const { return behavior_; }

 private:
  ProfiledImplementation(Profile profile, Assertion behavior);

  Profile profile_;
  Assertion behavior_;
};

// A contract with a profile attached.  Stored in canonical form, so plain
// behavior containment in the promise decides satisfaction.
class ProfiledContract {
 public:
  ProfiledContract() = default;

  static ProfiledContract make(Profile profile, const Assertion &assumption,
                               const Assertion &promise);
  static ProfiledContract make(Profile profile, const Contract &contract);

  const Profile &profile() const { return profile_; }
  const Assertion &assumption() const { return contract_.assumption(); }
  const Assertion &promise() const { return contract_.promise(); }
  const Contract &contract() const { return contract_; }

 private:
  ProfiledContract(Profile profile, Contract contract);

  Profile profile_;
  Contract contract_;
};

// Equal profiles and behavior containment (flat profile lattice).
bool refines(const ProfiledImplementation &m,
             const ProfiledImplementation &m_prime);

// Parallel composition of implementations.  Local and controlled ports are
// exclusive responsibilities: a clash on either is an error naming the
// ports.  The composed behavior must still be receptive to the composite
// uncontrolled set.
ProfiledImplementation compose(const ProfiledImplementation &m1,
                               const ProfiledImplementation &m2);

// The promise leaves uncontrolled ports free.
bool is_consistent(const ProfiledContract &c);
// The assumption leaves controlled ports free.
bool is_compatible(const ProfiledContract &c);

// Equal profiles and behavior ⊆ promise.
bool satisfies(const ProfiledImplementation &m, const ProfiledContract &c);

// Equal profiles and unprofiled dominance; different profiles compare false.
bool dominates(const ProfiledContract &c, const ProfiledContract &c_prime);

// Boolean algebra over a shared profile (unequal profiles are an error).
ProfiledContract meet(const ProfiledContract &c1, const ProfiledContract &c2);
ProfiledContract join(const ProfiledContract &c1, const ProfiledContract &c2);
ProfiledContract complement_contract(const ProfiledContract &c);

// Parallel composition of contracts: controlled sets must be disjoint;
// local ports may be shared.  A port local on one side and visible on the
// other ends up visible.
ProfiledContract compose(const ProfiledContract &c1, const ProfiledContract &c2);

// Compatibility of a pair: the composite assumption must leave the composite
// controlled ports free.
bool are_compatible(const ProfiledContract &c1, const ProfiledContract &c2);

// Profiled fusion: the unprofiled fusion formula with profiled composition
// and meet; eliminated ports leave every partition of the result profile.
ProfiledContract fuse(const std::vector<ProfiledContract> &contracts,
                      const std::set<std::string> &ports,
                      std::size_t max_contracts = kDefaultFusionCap);

}  // namespace hrc

#endif  // HRC_PROFILE_HPP
