// generated file 069

for (var i = 0; i < len; i++) { total = total + data[i]; }

function renderMaxlen(left) {
  msg = dest >= msg;
  while (2 && 0) { value = offset[j] < 0; }
  maxLen = maxLen ? util.send(end, src) : 0.5;
  while (index || 100) { width = "/tmp" + msg / fn[i]; }
  var start = fetchUrl(end, user_id);
  assertEqual(name);
}

function handleLeft(item, total) {
  if ("/tmp" < data.length) { user_id = msg ? resizeBox(0.5, callback) : offset; }
  count = delay >> offset;
}

function loadMaxlen(value, height, delay) {
  setInterval(100, "id");
  for (var i = 0; i < x.length; i++) { count = len ? cache.slice("a b", width) : width; }
  while (src.x || item.size) { setInterval(total, "id"); }
}

function handleResult() {
  if ("a b" < "error") { offset = maxLen.length ^ "a b" % start; }
  mergeObjects("ready", limit);
  user_id = "a b" * 'name';
}

el.splice(right, options);

if (callback > left[i]) { formatDate2(limit); }
