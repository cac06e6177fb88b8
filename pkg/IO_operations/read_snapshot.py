"""
@file read_snapshot.py

@brief Reading of robot snapshot files.

Copyright (C) 2025-2026 The WrenchPoly developers.
All rights reserved.

This file is part of WrenchPoly: wrench polytopes for multi-limbed robots.

WrenchPoly is free software: you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as
published by the Free Software Foundation, either version 3 of the
License, or (at your option) any later version.

WrenchPoly is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public
License along with WrenchPoly.  If not, see
<http://www.gnu.org/licenses/>.
"""

#.................................................
#   READ_SNAPSHOT.PY, v1.0.0, October 2026, WrenchPoly developers.
#.................................................
#   This module is needed to read a snapshot file:
#   {name, com, limbs: [{id, jacobian, tau_min, tau_max,
#   bias, foot}], contacts: [{limb_id, normal, mu,
#   num_edges}]}
#   and to create the RobotSnapshot object. Contacts are
#   aligned with the limbs through limb_id and take the
#   foot position of their limb. The rank of the
#   Jacobians is NOT checked here: it depends on the
#   tolerance and is checked when the polytopes are built.
#.................................................
import json  # JSON parsing
from pathlib import Path  # File paths
import numpy as np  # Module for numerical operations
from IO_operations.retrieve_helper import (check_keys, retrieve_number, retrieve_vector, retrieve_matrix,
                                           retrieve_positive_int, retrieve_string)  # Field validators
from utils.classes import LimbModel, ContactSpec, RobotSnapshot, Tolerance  # Robot description
from utils.errors import SnapshotLoadError, InputError  # Loading errors

SNAPSHOT_KEYS = ("limbs", "contacts")
SNAPSHOT_OPTIONAL_KEYS = ("name", "com")
LIMB_KEYS = ("id", "jacobian", "tau_min", "tau_max", "foot")
LIMB_OPTIONAL_KEYS = ("bias",)
CONTACT_KEYS = ("limb_id", "normal", "mu", "num_edges")


def read_limb(document, path, lax):
    """This function creates a LimbModel from its JSON object.

    Args:
        document (dict): the limb object
        path (string): its path, e.g. limbs[0]
        lax (bool): ignore unknown keys

    Raises:
        SnapshotLoadError: on any invalid field

    Returns:
        limb (LimbModel): the limb
    """
    check_keys(document, path, LIMB_KEYS, LIMB_OPTIONAL_KEYS, lax)
    limb_id = retrieve_string(document["id"], path + ".id")
    jacobian = retrieve_matrix(document["jacobian"], path + ".jacobian", n_rows=3)
    n = jacobian.shape[1]
    tau_min = retrieve_vector(document["tau_min"], path + ".tau_min", n)
    tau_max = retrieve_vector(document["tau_max"], path + ".tau_max", n)
    bias = retrieve_vector(document["bias"], path + ".bias", n) if "bias" in document else None
    foot = retrieve_vector(document["foot"], path + ".foot", 3)
    bad = np.nonzero(~(tau_min < tau_max))[0]
    if bad.size > 0:
        raise SnapshotLoadError(path + ".tau_min", "tau_min >= tau_max at joint " + str(int(bad[0])) + ".")
    try:
        return LimbModel(limb_id, jacobian, tau_min, tau_max, bias, foot)
    except InputError as e:
        raise SnapshotLoadError(path, str(e))


def read_contact(document, path, limb, lax, tol):
    """Creates the ContactSpec of a contact object, at the foot of its limb."""
    check_keys(document, path, CONTACT_KEYS, (), lax)
    normal = retrieve_vector(document["normal"], path + ".normal", 3)
    mu = retrieve_number(document["mu"], path + ".mu")
    num_edges = retrieve_positive_int(document["num_edges"], path + ".num_edges")
    try:
        return ContactSpec(normal, mu, num_edges, limb.foot_position, tol)
    except InputError as e:
        raise SnapshotLoadError(path, str(e))


def parse_snapshot(document, default_name="snapshot", lax=False, tol=None):
    """This function creates a RobotSnapshot from a parsed snapshot document.

    Args:
        document (dict): the parsed JSON document
        default_name (string, optional): name used when the document has none
        lax (bool, optional): ignore unknown keys
        tol (Tolerance, optional): tolerances for the unit-normal check

    Raises:
        SnapshotLoadError: on any invalid field, with its path

    Returns:
        robot (RobotSnapshot): the validated snapshot
    """
    tol = Tolerance() if tol is None else tol
    check_keys(document, "", SNAPSHOT_KEYS, SNAPSHOT_OPTIONAL_KEYS, lax)
    name = retrieve_string(document["name"], "name") if "name" in document else default_name
    com = retrieve_vector(document["com"], "com", 3) if "com" in document else np.zeros(3)
    if not isinstance(document["limbs"], list) or len(document["limbs"]) == 0:
        raise SnapshotLoadError("limbs", "expected a nonempty list of limbs.")
    limbs = [read_limb(item, "limbs[" + str(i) + "]", lax) for i, item in enumerate(document["limbs"])]
    index = {}
    for i, limb in enumerate(limbs):
        if limb.limb_id in index:
            raise SnapshotLoadError("limbs[" + str(i) + "].id", "duplicate limb id '" + limb.limb_id + "'.")
        index[limb.limb_id] = i
    if not isinstance(document["contacts"], list):
        raise SnapshotLoadError("contacts", "expected a list of contacts.")
    contacts = [None] * len(limbs)
    for j, item in enumerate(document["contacts"]):
        path = "contacts[" + str(j) + "]"
        check_keys(item, path, CONTACT_KEYS, (), lax)
        limb_id = retrieve_string(item["limb_id"], path + ".limb_id")
        if limb_id not in index:
            raise SnapshotLoadError(path + ".limb_id", "no limb with id '" + limb_id + "'.")
        k = index[limb_id]
        if contacts[k] is not None:
            raise SnapshotLoadError(path + ".limb_id", "limb '" + limb_id + "' has more than one contact.")
        contacts[k] = read_contact(item, path, limbs[k], lax, tol)
    for k, contact in enumerate(contacts):
        if contact is None:
            raise SnapshotLoadError("contacts", "limb '" + limbs[k].limb_id + "' has no contact.")
    try:
        return RobotSnapshot(name, limbs, contacts, com)
    except InputError as e:
        raise SnapshotLoadError("", str(e))


def load_snapshot(path, lax=False, tol=None):
    """This function reads a snapshot file.

    Args:
        path (string): path of the JSON file
        lax (bool, optional): ignore unknown keys
        tol (Tolerance, optional): tolerances

    Raises:
        SnapshotLoadError: if the file cannot be read, is not valid JSON
            (with line and column) or describes an invalid robot

    Returns:
        robot (RobotSnapshot): the validated snapshot
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise SnapshotLoadError(str(path), "cannot read the file: " + str(e))
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise SnapshotLoadError(str(path), e.msg + " at column " + str(e.colno), line=e.lineno)
    return parse_snapshot(document, path.stem, lax, tol)
#.................................................
#   Possible improvements:
#   - Read the Jacobians from a URDF and a joint configuration.
#.................................................
#   KNOW PROBLEMS:
#   None.
#.................................................
