import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from wecken.estimators import OUTPUT_COLUMNS, SelfCoincidenceAnalyzer, WeckenClassifier, check_dims, check_facts
from wecken.verdict import InconsistentFactsError

nan = np.nan


def test_classifier_predict():
    X = np.array([[30, 16], [254, 128], [11, 6], [24, 10], [13, 7]])
    clf = WeckenClassifier().fit(X)
    assert list(clf.predict(X)) == ["fails", "open", "fails", "conditional", "holds"]
    assert clf.predict_conditions(X)[3] == "halvable([iota_9,nu2_9])"


def test_classifier_score():
    X = [[30, 16], [11, 6]]
    assert WeckenClassifier().fit(X).score(X, ["fails", "fails"]) == 1.0


def test_params_and_clone():
    clf = WeckenClassifier(use_low_rule=False)
    assert clf.get_params() == {"facts_dir": None, "use_low_rule": False}
    assert clone(clf).get_params() == clf.get_params()
    a = SelfCoincidenceAnalyzer(group="trivial")
    assert clone(a).set_params(group="z2").group == "z2"


def test_not_fitted():
    with pytest.raises(NotFittedError):
        WeckenClassifier().predict([[3, 2]])


@pytest.mark.parametrize("X", [[[0, 4]], [[1.5, 4]], [[3, nan]], [[1, 2, 3]], [[[1, 2]]]])
def test_check_dims_rejects(X):
    with pytest.raises(ValueError):
        check_dims(X)


def test_check_dims_single_row():
    assert check_dims([30, 16]).shape == (1, 2)


def test_check_facts_rejects():
    with pytest.raises(ValueError, match="double_zero"):
        check_facts(np.array([[0.5]]))


def test_analyzer_transform():
    X = np.array([[30, 16, 1, 1], [30, 16, nan, nan], [13, 7, nan, nan]])
    out = SelfCoincidenceAnalyzer(group="z2").fit_transform(X)
    np.testing.assert_array_equal(out[0], [0, 1, 1, 0, 0, 1])
    assert np.isnan(out[1]).all()
    np.testing.assert_array_equal(out[2], [0, 0, 0, 1, 1, 0])
    assert out.shape[1] == len(OUTPUT_COLUMNS)


def test_analyzer_inconsistent_modes():
    X = np.array([[12, 6, 0]])
    with pytest.raises(InconsistentFactsError):
        SelfCoincidenceAnalyzer().fit_transform(X)
    out = SelfCoincidenceAnalyzer(on_inconsistent="nan").fit_transform(X)
    assert np.isnan(out).all()


@pytest.mark.parametrize("kw", [{"group": "z5"}, {"on_inconsistent": "skip"}])
def test_analyzer_bad_params(kw):
    with pytest.raises(ValueError):
        SelfCoincidenceAnalyzer(**kw).fit([[3, 2]])


def test_in_pipeline():
    pipe = make_pipeline(SelfCoincidenceAnalyzer(group="trivial"))
    out = pipe.fit_transform([[31, 14, 0]])
    assert out[0, 0] == 1 and out[0, 1] == 1
    assert list(pipe[-1].get_feature_names_out()) == list(OUTPUT_COLUMNS)
