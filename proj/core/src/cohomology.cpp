#include "rhoform/cohomology.hpp"

#include <map>

#include "rhoform/errors.hpp"

namespace rhoform {

std::vector<FormTensor> component_basis(const PresentationPtr& pres, const GradedUnitHom& phi,
                                        long degree, const Grade& alpha) {
    if (phi.group() != pres->group())
        fail(ErrorKind::GroupMismatch, "phi not defined on the presentation's group");
    // the structural basis does not depend on phi (phi twists only products)
    return component_basis_tensors(pres, degree, alpha);
}

ComplexSlice::ComplexSlice(PresentationPtr pres, GradedUnitHom phi, Grade alpha, int max_degree)
    : pres_(std::move(pres)), phi_(std::move(phi)), alpha_(std::move(alpha)),
      max_degree_(max_degree) {
    if (max_degree_ < 0) fail(ErrorKind::BadArgument, "max degree must be >= 0");
    bases_.reserve(static_cast<size_t>(max_degree_) + 2);
    for (int i = 0; i <= max_degree_ + 1; ++i)
        bases_.push_back(component_basis(pres_, phi_, i, alpha_));

    for (int i = 0; i <= max_degree_; ++i) {
        const auto& src = bases_[static_cast<size_t>(i)];
        const auto& dst = bases_[static_cast<size_t>(i + 1)];
        std::map<FormTensor, size_t> index;
        for (size_t r = 0; r < dst.size(); ++r) index.emplace(dst[r], r);
        ScalarMatrix m(dst.size(), src.size());
        for (size_t c = 0; c < src.size(); ++c) {
            Form image = Form::tensor(pres_, phi_, src[c]).differential();
            for (const auto& [t, coeff] : image.terms()) {
                auto it = index.find(t);
                if (it == index.end())
                    fail(ErrorKind::IllDefined, "differential left the enumerated component");
                m.at(it->second, c) = coeff;
            }
        }
        matrices_.push_back(std::move(m));
    }
    // d^2 = 0, matrix form
    for (int i = 0; i + 1 <= max_degree_; ++i) {
        ScalarMatrix composite =
            matrices_[static_cast<size_t>(i + 1)] * matrices_[static_cast<size_t>(i)];
        if (!composite.is_zero())
            fail(ErrorKind::IllDefined, "d^2 != 0 on an assembled slice");
    }
}

std::vector<long> ComplexSlice::dimensions() const {
    std::vector<long> d;
    for (int i = 0; i <= max_degree_; ++i) d.push_back(dimension(i));
    return d;
}

std::vector<long> ComplexSlice::betti() const {
    std::vector<long> b;
    long prev_rank = 0; // rank of d_{-1}
    for (int i = 0; i <= max_degree_; ++i) {
        const ScalarMatrix& di = matrices_[static_cast<size_t>(i)];
        long rank = static_cast<long>(di.rank());
        long dim = dimension(i);
        long kernel = dim - rank;
        if (kernel < 0 || kernel + rank != dim)
            fail(ErrorKind::IllDefined, "rank-nullity bookkeeping failed");
        b.push_back(kernel - prev_rank);
        prev_rank = rank;
    }
    return b;
}

BettiResult betti_numbers(const PresentationPtr& pres, const GradedUnitHom& phi,
                          const Grade& alpha, int max_degree) {
    ComplexSlice slice(pres, phi, alpha, max_degree);
    return BettiResult{slice.betti(), slice.dimensions()};
}

} // namespace rhoform
