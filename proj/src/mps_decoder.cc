// Copyright 2026 The colorseam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "colorseam/mps_decoder.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace colorseam {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowMap = Eigen::Map<RowMat>;
using ConstRowMap = Eigen::Map<const RowMat>;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// MPS site with legs (left, physical, right), stored row-major.
struct Site {
    int left = 1;
    int phys = 1;
    int right = 1;
    std::vector<double> data{1.0};

    double &at(int l, int p, int r) { return data[(static_cast<size_t>(l) * phys + p) * right + r]; }
    double at(int l, int p, int r) const {
        return data[(static_cast<size_t>(l) * phys + p) * right + r];
    }
    // (left * phys) x right
    ConstRowMap left_grouped() const { return {data.data(), left * phys, right}; }
    // left x (phys * right)
    ConstRowMap right_grouped() const { return {data.data(), left, phys * right}; }
};

// One site tensor of the coset network, legs (N, E, S, W).
struct GridTensor {
    int dn = 1, de = 1, ds = 1, dw = 1;
    double v[2][2][2][2] = {};
};

class Sweep {
   public:
    Sweep(const CodeLattice &lattice, const std::vector<double> &p_flip, int chi)
        : lattice_(lattice), p_flip_(p_flip), chi_(chi), extent_(lattice.extent()) {}

    GridTensor tensor(int r, int c, const ErrorVector &flips) const {
        GridTensor t;
        t.dn = c <= r - 1 ? 2 : 1;
        t.ds = r + 1 <= extent_ ? 2 : 1;
        t.de = c + 1 <= r ? 2 : 1;
        t.dw = c >= 1 ? 2 : 1;
        const int cls = (r + c) % 3;
        const int q = cls == 1 ? -1 : lattice_.qubit_at(r, c);
        for (int n = 0; n < t.dn; n++) {
            for (int e = 0; e < t.de; e++) {
                for (int s = 0; s < t.ds; s++) {
                    for (int w = 0; w < t.dw; w++) {
                        double val;
                        if (cls == 1) {
                            // Face copy tensor: every present leg holds the face bit.
                            const int dims[4] = {t.dn, t.de, t.ds, t.dw};
                            const int vals[4] = {n, e, s, w};
                            int ref = -1;
                            bool same = true;
                            for (int k = 0; k < 4; k++) {
                                if (dims[k] == 1) continue;
                                if (ref < 0) ref = vals[k];
                                same = same && vals[k] == ref;
                            }
                            val = same ? 1.0 : 0.0;
                        } else {
                            if (n != e) {
                                val = 0.0;
                            } else {
                                // Class-0 qubits read their faces on E, S, W;
                                // class-2 qubits on N, S, W.
                                int b = flips[q] ^ s ^ w ^ (cls == 0 ? e : n);
                                val = b ? p_flip_[q] : 1.0 - p_flip_[q];
                            }
                        }
                        t.v[n][e][s][w] = val;
                    }
                }
            }
        }
        return t;
    }

    // Contracts the row's tensors into the MPS sites 0..r.
    void absorb_row(int r, const ErrorVector &flips) {
        for (int c = 0; c <= r; c++) {
            GridTensor t = tensor(r, c, flips);
            const Site &old = sites_[c];
            Site next;
            next.left = old.left * t.dw;
            next.phys = t.ds;
            next.right = old.right * t.de;
            next.data.assign(static_cast<size_t>(next.left) * next.phys * next.right, 0.0);
            for (int l = 0; l < old.left; l++) {
                for (int rr = 0; rr < old.right; rr++) {
                    for (int n = 0; n < t.dn; n++) {
                        double m = old.at(l, n, rr);
                        if (m == 0.0) continue;
                        for (int w = 0; w < t.dw; w++) {
                            for (int s = 0; s < t.ds; s++) {
                                for (int e = 0; e < t.de; e++) {
                                    double tv = t.v[n][e][s][w];
                                    if (tv != 0.0) next.at(l * t.dw + w, s, rr * t.de + e) += m * tv;
                                }
                            }
                        }
                    }
                }
            }
            sites_[c] = std::move(next);
        }
    }

    // Left-canonicalises sites 0..last with QR, then truncates every bond to
    // chi with SVD sweeping back. Returns false if the state vanished.
    bool compress(int last) {
        for (int c = 0; c < last; c++) {
            Site &cur = sites_[c];
            Site &nxt = sites_[c + 1];
            RowMat a = cur.left_grouped();
            Eigen::HouseholderQR<RowMat> qr(a);
            const int k = static_cast<int>(std::min(a.rows(), a.cols()));
            RowMat q = qr.householderQ() * RowMat::Identity(a.rows(), k);
            RowMat rmat = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
            RowMat moved = rmat * nxt.right_grouped();
            cur.right = k;
            cur.data.assign(q.data(), q.data() + q.size());
            nxt.left = k;
            nxt.data.assign(moved.data(), moved.data() + moved.size());
        }
        for (int c = last; c >= 1; c--) {
            Site &cur = sites_[c];
            Site &prev = sites_[c - 1];
            RowMat a = cur.right_grouped();
            Eigen::JacobiSVD<RowMat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
            int k = static_cast<int>(svd.singularValues().size());
            if (chi_ > 0) k = std::min(k, chi_);
            RowMat vt = svd.matrixV().leftCols(k).transpose();
            RowMat us = svd.matrixU().leftCols(k) * svd.singularValues().head(k).asDiagonal();
            RowMat moved = prev.left_grouped() * us;
            cur.left = k;
            cur.data.assign(vt.data(), vt.data() + vt.size());
            prev.right = k;
            prev.data.assign(moved.data(), moved.data() + moved.size());
        }
        Site &head = sites_[0];
        double norm = 0.0;
        for (double x : head.data) norm += x * x;
        norm = std::sqrt(norm);
        if (!(norm > 0.0)) return false;
        for (double &x : head.data) x /= norm;
        log_scale_ += std::log(norm);
        return true;
    }

    // Contracts the final row against the MPS without truncation.
    double close(const ErrorVector &flips) const {
        const int r = extent_;
        Eigen::RowVectorXd env = Eigen::RowVectorXd::Ones(1);
        for (int c = 0; c <= r; c++) {
            GridTensor t = tensor(r, c, flips);
            const Site &m = sites_[c];
            Eigen::RowVectorXd next = Eigen::RowVectorXd::Zero(m.right * t.de);
            for (int l = 0; l < m.left; l++) {
                for (int w = 0; w < t.dw; w++) {
                    double el = env[l * t.dw + w];
                    if (el == 0.0) continue;
                    for (int n = 0; n < t.dn; n++) {
                        for (int rr = 0; rr < m.right; rr++) {
                            double mv = m.at(l, n, rr);
                            if (mv == 0.0) continue;
                            for (int e = 0; e < t.de; e++) next[rr * t.de + e] += el * mv * t.v[n][e][0][w];
                        }
                    }
                }
            }
            env = std::move(next);
        }
        double value = env[0];
        return value > 0.0 ? log_scale_ + std::log(value) : kNegInf;
    }

    std::array<double, 2> run(const ErrorVector &identity_rep, const ErrorVector &logical_rep) {
        sites_.assign(extent_ + 1, Site{});
        log_scale_ = 0.0;
        for (int r = 0; r < extent_; r++) {
            absorb_row(r, identity_rep);
            if (!compress(r)) return {kNegInf, kNegInf};
        }
        return {close(identity_rep), close(logical_rep)};
    }

   private:
    const CodeLattice &lattice_;
    const std::vector<double> &p_flip_;
    int chi_;
    int extent_;
    std::vector<Site> sites_;
    double log_scale_ = 0.0;
};

}  // namespace

MpsDecoder::MpsDecoder(const CodeLattice &lattice, const NoiseProfile &profile, int chi)
    : lattice_(lattice), p_flip_(profile.per_qubit), chi_(chi) {
    if (chi < 0) throw std::invalid_argument("bond dimension must be positive (0 = exact)");
    if (p_flip_.size() != lattice.num_qubits()) {
        throw std::invalid_argument("noise profile does not match lattice");
    }
    for (double p : p_flip_) {
        if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("flip probability outside [0, 1)");
    }
}

std::array<double, 2> MpsDecoder::coset_log_weights(const SyndromeVector &s) const {
    ErrorVector rep = lattice_.canonical_error(s);
    ErrorVector logical_rep = rep ^ lattice_.logical_mask();
    // Rows above the last one never see the logical support.
    Sweep sweep(lattice_, p_flip_, chi_);
    return sweep.run(rep, logical_rep);
}

double MpsDecoder::coset_log_weight(const SyndromeVector &s, LogicalClass cls) const {
    auto w = coset_log_weights(s);
    return cls == LogicalClass::Identity ? w[0] : w[1];
}

DecodeResult MpsDecoder::decode(const SyndromeVector &s) const {
    auto w = coset_log_weights(s);
    LogicalClass cls = w[1] > w[0] ? LogicalClass::Logical : LogicalClass::Identity;
    return {cls, coset_representative(lattice_, s, cls)};
}

double coset_weight_mps(const CodeLattice &lattice, const NoiseProfile &profile,
                        const SyndromeVector &s, LogicalClass cls, int chi) {
    if (chi < 1) throw std::invalid_argument("bond dimension must be at least 1");
    return std::exp(MpsDecoder(lattice, profile, chi).coset_log_weight(s, cls));
}

DecodeResult decode_mps(const CodeLattice &lattice, const NoiseProfile &profile,
                        const SyndromeVector &s, int chi) {
    if (chi < 1) throw std::invalid_argument("bond dimension must be at least 1");
    return MpsDecoder(lattice, profile, chi).decode(s);
}

}  // namespace colorseam
