#include <algorithm>
#include <cstdint>

#include "vlang/error.hpp"
#include "vlang/system_model.hpp"
#include "vlang/text.hpp"

namespace vlang {

namespace {

// Relations are bitmasks over an n x n matrix, so n is capped by the width
// of the mask.
constexpr std::size_t kMaxClasses = 8;
// Without the preorder shortcut every relation is visited.
constexpr std::size_t kMaxNaiveRelationBits = 24;
constexpr std::size_t kMaxMaskBits = 24;

std::vector<std::string> RemainingExtras(const Universe& u) {
  std::set<std::string> extras(u.bounds.extra_classes.begin(),
                               u.bounds.extra_classes.end());
  std::vector<std::string> out;
  for (const std::string& c : extras) {
    if (u.required_classes.count(c) == 0) out.push_back(c);
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const Universe& u, const Validity& valid, const SystemVisitor& visit)
      : u_(u), valid_(valid), visit_(visit) {}

  std::size_t Run() {
    std::vector<std::string> extras = RemainingExtras(u_);
    if (extras.size() > kMaxMaskBits) {
      throw Error(ErrorKind::kConfiguration, "too many extra classes");
    }
    for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << extras.size()) && !stop_;
         ++cm) {
      std::set<std::string> cls = u_.required_classes;
      for (std::size_t i = 0; i < extras.size(); ++i) {
        if (cm >> i & 1) cls.insert(extras[i]);
      }
      RunClasses({cls.begin(), cls.end()});
    }
    return count_;
  }

 private:
  std::size_t Bit(std::size_t i, std::size_t j) const { return i * n_ + j; }
  bool Get(std::size_t i, std::size_t j) const { return sub_ >> Bit(i, j) & 1; }

  void RunClasses(std::vector<std::string> cls) {
    classes_ = std::move(cls);
    n_ = classes_.size();
    if (n_ > kMaxClasses) {
      throw Error(ErrorKind::kConfiguration,
                  "at most " + std::to_string(kMaxClasses) +
                      " classes can be enumerated");
    }
    attrs_.clear();
    std::set<std::string> present(classes_.begin(), classes_.end());
    for (const AttrCandidate& a : u_.bounds.attr_candidates) {
      if (present.count(a.owner) && present.count(a.target)) attrs_.push_back(a);
    }
    if (attrs_.size() > kMaxMaskBits) {
      throw Error(ErrorKind::kConfiguration, "too many attribute candidates");
    }
    sub_ = 0;
    if (valid_.implies_base()) {
      if (n_ * n_ == 0) {
        RunRelation();
      } else {
        Preorders(n_ * n_ - 1);
      }
    } else {
      if (n_ * n_ > kMaxNaiveRelationBits) {
        throw Error(ErrorKind::kConfiguration,
                    "relation space too large for an unrestricted predicate");
      }
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n_ * n_)) && !stop_;
           ++m) {
        sub_ = m;
        RunRelation();
      }
    }
  }

  // Assigns bits from the most significant down, 0 before 1, so complete
  // relations come out in ascending numeric order. Diagonal bits are forced
  // and a branch is cut as soon as a fully assigned triple breaks
  // transitivity.
  void Preorders(std::size_t bit) {
    std::size_t i = bit / n_, j = bit % n_;
    for (int value = (i == j) ? 1 : 0; value <= 1 && !stop_; ++value) {
      if (value) {
        sub_ |= std::uint64_t{1} << bit;
      } else {
        sub_ &= ~(std::uint64_t{1} << bit);
      }
      if (!TransitiveAt(bit)) continue;
      if (bit == 0) {
        RunRelation();
      } else {
        Preorders(bit - 1);
      }
    }
    sub_ &= ~(std::uint64_t{1} << bit);
  }

  bool TransitiveAt(std::size_t p) const {
    std::size_t i = p / n_, j = p % n_;
    for (std::size_t k = 0; k < n_; ++k) {
      // p as (a,b): (i,j) and (j,k) imply (i,k)
      if (Bit(j, k) >= p && Bit(i, k) >= p && Get(i, j) && Get(j, k) &&
          !Get(i, k))
        return false;
      // p as (b,c): (k,i) and (i,j) imply (k,j)
      if (Bit(k, i) >= p && Bit(k, j) >= p && Get(k, i) && Get(i, j) &&
          !Get(k, j))
        return false;
      // p as (a,c): (i,k) and (k,j) imply (i,j)
      if (Bit(i, k) >= p && Bit(k, j) >= p && Get(i, k) && Get(k, j) &&
          !Get(i, j))
        return false;
    }
    return true;
  }

  void RunRelation() {
    for (std::uint64_t am = 0; am < (std::uint64_t{1} << attrs_.size()) && !stop_;
         ++am) {
      attr_mask_ = am;
      if (!AttrNamesUnique()) continue;
      for (std::size_t k = 0; k <= u_.bounds.max_objects && !stop_; ++k) {
        if (k > 0 && n_ == 0) break;
        population_.assign(k, 0);
        Populate(0, 0);
      }
    }
  }

  bool AttrNamesUnique() const {
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < attrs_.size(); ++i) {
      if (attr_mask_ >> i & 1) {
        if (!seen.insert({attrs_[i].owner, attrs_[i].name}).second) return false;
      }
    }
    return true;
  }

  void Populate(std::size_t index, std::size_t min_class) {
    if (stop_) return;
    if (index == population_.size()) {
      Emit();
      return;
    }
    for (std::size_t c = min_class; c < n_ && !stop_; ++c) {
      population_[index] = c;
      Populate(index + 1, c);
    }
  }

  void Emit() {
    SystemModel sm;
    sm.classes.insert(classes_.begin(), classes_.end());
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (Get(i, j)) sm.sub.insert({classes_[i], classes_[j]});
      }
    }
    for (std::size_t i = 0; i < attrs_.size(); ++i) {
      if (attr_mask_ >> i & 1) {
        sm.attrs[attrs_[i].owner].insert({attrs_[i].name, attrs_[i].target});
      }
    }
    for (std::size_t o = 0; o < population_.size(); ++o) {
      std::string id = ObjectId(o + 1);
      sm.objects.push_back(id);
      sm.class_of.emplace(id, classes_[population_[o]]);
    }
    if (!valid_(sm)) return;
    ++count_;
    if (!visit_(sm)) stop_ = true;
  }

  const Universe& u_;
  const Validity& valid_;
  const SystemVisitor& visit_;

  std::vector<std::string> classes_;
  std::size_t n_ = 0;
  std::uint64_t sub_ = 0;
  std::vector<AttrCandidate> attrs_;
  std::uint64_t attr_mask_ = 0;
  std::vector<std::size_t> population_;
  std::size_t count_ = 0;
  bool stop_ = false;
};

}  // namespace

bool Universe::Contains(const SystemModel& sm) const {
  for (const std::string& c : required_classes) {
    if (!sm.HasClass(c)) return false;
  }
  std::set<std::string> allowed = required_classes;
  allowed.insert(bounds.extra_classes.begin(), bounds.extra_classes.end());
  for (const std::string& c : sm.classes) {
    if (allowed.count(c) == 0) return false;
  }
  for (const auto& [owner, set] : sm.attrs) {
    for (const Attribute& a : set) {
      if (bounds.attr_candidates.count({owner, a.name, a.target}) == 0) {
        return false;
      }
    }
  }
  if (sm.objects.size() > bounds.max_objects) return false;
  std::vector<std::string> classes(sm.classes.begin(), sm.classes.end());
  std::size_t last = 0;
  for (std::size_t i = 0; i < sm.objects.size(); ++i) {
    if (sm.objects[i] != ObjectId(i + 1)) return false;
    auto it = sm.class_of.find(sm.objects[i]);
    if (it == sm.class_of.end()) return false;
    auto pos = static_cast<std::size_t>(
        std::lower_bound(classes.begin(), classes.end(), it->second) -
        classes.begin());
    if (pos < last) return false;
    last = pos;
  }
  return true;
}

std::string ToString(const Universe& u) {
  std::vector<std::string> attrs;
  for (const AttrCandidate& a : u.bounds.attr_candidates) {
    attrs.push_back(a.owner + "." + a.name + ":" + a.target);
  }
  return "classes={" +
         Join({u.required_classes.begin(), u.required_classes.end()}, ",") +
         "} extra={" + Join(RemainingExtras(u), ",") +
         "} max-objects=" + std::to_string(u.bounds.max_objects) + " attrs={" +
         Join(attrs, ",") + "}";
}

std::size_t EnumerateSystems(const Universe& universe, const Validity& valid,
                             const SystemVisitor& visit) {
  return Enumerator(universe, valid, visit).Run();
}

std::vector<SystemModel> EnumerateAll(const Universe& universe,
                                      const Validity& valid) {
  std::vector<SystemModel> out;
  EnumerateSystems(universe, valid, [&](const SystemModel& sm) {
    out.push_back(sm);
    return true;
  });
  return out;
}

}  // namespace vlang
