#include "doctest.h"
#include "featbench/errors.hpp"
#include "featbench/nn.hpp"
#include "featbench/rng.hpp"
#include "oracles.hpp"

using namespace featbench;

TEST_CASE("nn_fit stores data verbatim") {
    const Matrix x = Matrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    const TrainedNN model = nn_fit(x, {1, 2});
    CHECK(model.train_x == x);
    CHECK(model.labels == std::vector<int>{1, 2});

    const TrainedNN tiny = nn_fit(Matrix::from_rows({{0.0}}), {5});
    CHECK(tiny.train_x.rows() == 1);
}

TEST_CASE("nn_fit error paths") {
    CHECK_THROWS_AS(nn_fit(Matrix(), {}), EmptyDataset);
    CHECK_THROWS_AS(nn_fit(Matrix::from_rows({{1.0}, {2.0}}), {1}), DimensionMismatch);
}

TEST_CASE("nn_predict exact hit and tie rule") {
    const Matrix x = Matrix::from_rows({{0.0, 0.0}, {2.0, 0.0}, {4.0, 0.0}});
    const TrainedNN model = nn_fit(x, {1, 2, 3});

    CHECK(nn_predict(model, Matrix::from_rows({{2.0, 0.0}})) == std::vector<int>{2});
    // (1,0) is equidistant from rows 0 and 1; lowest index wins.
    CHECK(nn_predict(model, Matrix::from_rows({{1.0, 0.0}})) == std::vector<int>{1});

    CHECK_THROWS_AS(nn_predict(model, Matrix(1, 3, 0.0)), DimensionMismatch);
}

TEST_CASE("nn_predict separates well-separated blobs") {
    const Matrix centers = Matrix::from_rows({{0.0, 0.0}, {20.0, 20.0}});
    auto [train_x, train_y] = oracles::make_blobs(centers, 20, 1.0, RngStream(31, 0));
    auto [test_x, test_y] = oracles::make_blobs(centers, 10, 1.0, RngStream(31, 1));
    const std::vector<int> pred = nn_predict(nn_fit(train_x, train_y), test_x);
    CHECK(pred == test_y);
}
