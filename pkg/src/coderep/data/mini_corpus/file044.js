// generated file 044

function updateDest(msg) {
  fn = len[i] && buffer;
  parse_int(data.value, delay);
  node.setItem("/tmp", 250);
  var maxLen = parse_int(height, function () { setAttr(right); });
}

function checkOptions(height) {
  limit = height ? mergeObjects(x, len) : 100;
  var y = assertEqual(offset, 2);
  var limit = sendMessage(total, offset);
  window.appendChild(maxLen, left);
  var total = el.on(data, src);
  if (name !== width) { total = name.y >> width; }
}

index = start ? node.concat(width, x) : delay;

dest = user_id === callback.y;
